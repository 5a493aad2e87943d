//! Synchronizing words and Fischer covers. The even shift's cover is its
//! two-vertex subgraph; transported to the language forbidding 001 it misses
//! the word 00, so that language is not irreducible.

use soficlab::corpus;
use soficlab::covers::{default_language_bound, first_language_difference, fischer_cover, synchronizing_words, transport_subgraph};
use soficlab::equivalence::unlabeled_isomorphism;
use soficlab::{build_fsg, build_fsg_from_presentation, Convention};

fn main() -> soficlab::Result<()> {
    let even = build_fsg_from_presentation(&corpus::even_shift())?;
    for (v, w) in synchronizing_words(even.graph())? {
        println!("{} is reached by {}", even.graph().vertex(v).id, even.alphabet().display_word(&w));
    }
    let cover = fischer_cover(&even)?;
    println!("cover irreducible: {}", cover.irreducibility.irreducible);
    print!("{}", cover.graph.to_dot("even_cover", None, Convention::Left));

    let sft = build_fsg(&corpus::sft_001())?;
    let w = unlabeled_isomorphism(&even, &sft).expect("isomorphic graphs");
    let image = transport_subgraph(&even, &sft, &w, &cover.vertices)?;
    let diff = first_language_difference(&image, sft.graph(), default_language_bound(sft.graph()))?;
    println!("transported subgraph first misses a word of length {diff:?}");
    let c = fischer_cover(&sft)?;
    println!("{{001}}: {}", c.note.unwrap_or("irreducible"));
    Ok(())
}
