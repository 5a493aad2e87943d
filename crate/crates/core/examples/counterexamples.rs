//! Two type-2 pairs whose follower set graphs are unlabeled isomorphic
//! although no witness lifts to a renaming of symbols, followed by the
//! bundled example corpus.

use soficlab::corpus::{self, run_examples};
use soficlab::equivalence::{all_unlabeled_isomorphisms, lift_vertex_map};
use soficlab::build_fsg;

fn main() -> soficlab::Result<()> {
    for (l, m) in [corpus::counter1(), corpus::counter2()] {
        let (gl, gm) = (build_fsg(&l)?, build_fsg(&m)?);
        let all = all_unlabeled_isomorphisms(&gl, &gm);
        let lifts = all.iter().filter(|w| lift_vertex_map(&gl, &gm, &w.vertex_map).is_some()).count();
        println!("{}: {} unlabeled witnesses, {lifts} lift", l.name().unwrap_or(""), all.len());
    }
    let report = run_examples("")?;
    print!("{}", report.render());
    Ok(())
}
