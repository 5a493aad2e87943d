//! Follower set graph of the type-2 language forbidding 101 and 110,
//! with its truth table and the graph in DOT form.

use soficlab::fsg::{validate_fsg, TruthTable};
use soficlab::{build_fsg, Convention, LanguageSpec};

fn main() -> soficlab::Result<()> {
    let spec = LanguageSpec::from_strs(&["0", "1"], &["101", "110"])?;
    println!("{}", TruthTable::build(&spec, 2)?.render(spec.alphabet()));

    let g = build_fsg(&spec)?;
    for class in g.vertex_partition() {
        let words: Vec<String> = class.iter().map(|w| spec.alphabet().display_word(w)).collect();
        println!("F({}) = {{{}}}", words[0], words.join(", "));
    }
    println!("{}", validate_fsg(&g).render(&g));
    print!("{}", g.to_dot("first", Convention::Left));
    Ok(())
}
