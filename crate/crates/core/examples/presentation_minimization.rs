//! A redundant presentation (the golden mean shift drawn with duplicated
//! vertices) collapses to the two-vertex follower set graph.

use soficlab::dynamics::quantized_maps;
use soficlab::{build_fsg_from_presentation, Convention, LabeledGraph};

fn main() -> soficlab::Result<()> {
    let p = LabeledGraph::from_triples(
        &["0", "1"],
        &["a", "b", "a2", "b2"],
        &[("a", "a2", "0"), ("a", "b", "1"), ("a2", "a", "0"), ("a2", "b2", "1"), ("b", "a", "0"), ("b2", "a2", "0")],
    )?;
    let g = build_fsg_from_presentation(&p)?;
    println!("{} vertices become {}", p.vertex_count(), g.vertex_count());
    print!("{}", g.to_json(Convention::Left));
    let q = quantized_maps(&g);
    for (v, m) in q.q_support.iter().enumerate() {
        println!("{} has support {m}", g.graph().vertex(v).id);
    }
    Ok(())
}
