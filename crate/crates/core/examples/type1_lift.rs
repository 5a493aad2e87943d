//! For type-1 languages whose symbols have distinct follower sets, an
//! unlabeled isomorphism of follower set graphs always lifts to a renaming of
//! symbols. Here a random renaming is undone from the graphs alone.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use soficlab::build_fsg;
use soficlab::equivalence::{follower_injective_on_symbols, lift_unlabeled_to_labeled, unlabeled_isomorphism};
use soficlab::sampling::{lift_suite, permute_symbols, random_permutation, random_type1};

fn main() -> soficlab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let spec = loop {
        let s = random_type1(&mut rng, 4, 0.35)?;
        if follower_injective_on_symbols(&build_fsg(&s)?) {
            break s;
        }
    };
    let perm = random_permutation(&mut rng, 4);
    let renamed = permute_symbols(&spec, &perm)?;
    let (g, h) = (build_fsg(&spec)?, build_fsg(&renamed)?);

    let w = unlabeled_isomorphism(&g, &h).expect("renaming keeps the graph");
    let lifted = lift_unlabeled_to_labeled(&g, &h, &w)?.expect("type 1 with distinct followers lifts");
    let tokens = |p: &[soficlab::Symbol]| p.iter().map(|s| spec.alphabet().token(*s)).collect::<Vec<_>>().join(" ");
    println!("renaming applied:   {}", tokens(&perm));
    println!("renaming recovered: {}", tokens(lifted.symbol_map().unwrap()));

    let report = lift_suite(42, 100)?;
    println!(
        "{} injective pairs and {} two-symbol pairs checked, {} violations",
        report.injective_pairs,
        report.two_symbol_pairs,
        report.violations.len()
    );
    Ok(())
}
