//! The even shift and the language forbidding 001 have unlabeled-isomorphic
//! follower set graphs but are not the same language up to renaming. The
//! witness induces length-preserving bijections f_n between their words.

use soficlab::corpus;
use soficlab::dynamics::entropy_and_growth;
use soficlab::equivalence::{labeled_isomorphism, lpc_word_bijection, unlabeled_isomorphism};
use soficlab::{build_fsg, build_fsg_from_presentation};

fn main() -> soficlab::Result<()> {
    let even = build_fsg_from_presentation(&corpus::even_shift())?;
    let spec = corpus::sft_001();
    let sft = build_fsg(&spec)?;

    println!("labeled isomorphism: {}", labeled_isomorphism(&even, &sft).is_some());
    let w = unlabeled_isomorphism(&even, &sft).expect("the graphs differ only in one label");
    println!("unlabeled witness: {}", serde_json::to_string(&w.to_document(&even, &sft))?);

    for (mu, image) in lpc_word_bijection(&w, &even, &sft, 4)? {
        println!("f_4({}) = {}", spec.format_word(&mu), spec.format_word(&image));
    }

    let (a, b) = (entropy_and_growth(&even, 16)?, entropy_and_growth(&sft, 16)?);
    println!("|B_16|: {} and {}", a.counts[16], b.counts[16]);
    println!("entropy: {:.12} and {:.12}", a.entropy, b.entropy);
    Ok(())
}
