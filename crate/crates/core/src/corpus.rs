//! Named languages and presentations used throughout the examples and tests.

use std::fmt;

use crate::covers::{default_language_bound, first_language_difference, fischer_cover, is_irreducible, transport_subgraph};
use crate::dynamics::entropy_and_growth;
use crate::equivalence::{
    all_labeled_isomorphisms, all_unlabeled_isomorphisms, follower_injective_on_symbols, labeled_isomorphism,
    lift_vertex_map, lpc_word_bijection, unlabeled_isomorphism,
};
use crate::error::{Error, Result};
use crate::fsg::{augment_with_zeta, build_fsg, build_fsg_from_presentation, validate_fsg, FollowerSetGraph};
use crate::graph::{LabeledGraph, Presentation};
use crate::language::{LanguageSpec, Word};

fn spec(name: &str, tokens: &[&str], words: &[&str]) -> LanguageSpec {
    LanguageSpec::from_strs(tokens, words).expect("corpus specs are valid").with_name(name)
}

/// Forbidden words {101, 110}.
pub fn first() -> LanguageSpec {
    spec("first", &["0", "1"], &["101", "110"])
}

/// The golden mean shift, forbidden word 11.
pub fn golden_mean() -> LanguageSpec {
    spec("golden-mean", &["0", "1"], &["11"])
}

/// The full language on `d` symbols named `0, 1, …`.
pub fn full(d: usize) -> LanguageSpec {
    let tokens: Vec<String> = (0..d).map(|i| i.to_string()).collect();
    let tokens: Vec<&str> = tokens.iter().map(String::as_str).collect();
    spec("full", &tokens, &[])
}

/// Forbidden word 001; shares its unlabeled graph with the even shift.
pub fn sft_001() -> LanguageSpec {
    spec("sft-001", &["0", "1"], &["001"])
}

/// Forbidden word 00.
pub fn sft_00() -> LanguageSpec {
    spec("sft-00", &["0", "1"], &["00"])
}

/// Three-vertex presentation of the even shift. It has no finite forbidden
/// set: the forbidden words are `1 0^{2n+1} 1` for all `n`.
pub fn even_shift() -> Presentation {
    LabeledGraph::from_triples(
        &["0", "1"],
        &["F(∅)", "F(1)", "F(01)"],
        &[
            ("F(∅)", "F(∅)", "0"),
            ("F(∅)", "F(1)", "1"),
            ("F(1)", "F(1)", "1"),
            ("F(1)", "F(01)", "0"),
            ("F(01)", "F(1)", "0"),
        ],
    )
    .expect("valid presentation")
}

/// The two-vertex irreducible cover of the even shift.
pub fn even_shift_cover() -> Presentation {
    LabeledGraph::from_triples(
        &["0", "1"],
        &["F(1)", "F(01)"],
        &[("F(1)", "F(1)", "1"), ("F(1)", "F(01)", "0"), ("F(01)", "F(1)", "0")],
    )
    .expect("valid presentation")
}

const FIVE: [&str; 5] = ["1", "2", "3", "4", "5"];

/// Two type-1 languages on five symbols with the same unlabeled but different
/// labeled follower set graphs.
pub fn not_same_sft() -> (LanguageSpec, LanguageSpec) {
    let common = ["11", "21", "31", "41", "12", "22", "32", "42", "13", "33", "44"];
    let mut a = common.to_vec();
    a.push("24");
    let mut b = common.to_vec();
    b.push("14");
    (spec("not-same-sft-L", &FIVE, &a), spec("not-same-sft-M", &FIVE, &b))
}

/// Type-2 pair with a unique unlabeled isomorphism that does not lift.
pub fn counter1() -> (LanguageSpec, LanguageSpec) {
    (
        spec("counter1-L", &["0", "1"], &["000", "010", "001", "101", "011"]),
        spec("counter1-M", &["0", "1"], &["000", "010", "001", "100", "011"]),
    )
}

/// Type-2 pair with two unlabeled isomorphisms, neither of which lifts.
pub fn counter2() -> (LanguageSpec, LanguageSpec) {
    (
        spec("counter2-L", &["0", "1"], &["000", "100", "010", "101", "011", "111"]),
        spec("counter2-M", &["0", "1"], &["000", "110", "010", "101", "001", "111"]),
    )
}

/// The four two-symbol languages of type at most 1 with `F(0) = F(1)`.
pub fn degenerate_type1() -> Vec<LanguageSpec> {
    [&[][..], &["00", "10", "01", "11"], &["00", "01"], &["11", "10"]]
        .iter()
        .map(|w| spec("degenerate", &["0", "1"], w))
        .collect()
}

// ---------------------------------------------------------------------------
// Self-checking cases

/// One expectation of a bundled case and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub case: &'static str,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

/// A named bundle of inputs with expected results.
#[derive(Clone, Copy, Debug)]
pub struct ExampleCase {
    pub name: &'static str,
    pub summary: &'static str,
    run: fn(&mut Checks) -> Result<()>,
}

impl ExampleCase {
    pub fn run(&self) -> Vec<CheckOutcome> {
        let mut c = Checks { case: self.name, out: Vec::new() };
        if let Err(e) = (self.run)(&mut c) {
            c.expect("case runs without error", false, e.to_string());
        }
        c.out
    }
}

/// Collects outcomes for one case.
pub struct Checks {
    case: &'static str,
    out: Vec<CheckOutcome>,
}

impl Checks {
    pub fn expect(&mut self, statement: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(CheckOutcome { case: self.case, statement: statement.into(), passed, detail: detail.into() });
    }

    pub fn equal<T: fmt::Debug + PartialEq>(&mut self, statement: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, want {want:?}") };
        self.expect(statement, passed, detail);
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExampleReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut last = "";
        for o in &self.outcomes {
            if o.case != last {
                out.push_str(&format!("{}\n", o.case));
                last = o.case;
            }
            out.push_str(&format!("  [{}] {}: {}\n", if o.passed { "ok" } else { "FAIL" }, o.statement, o.detail));
        }
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.outcomes.len(),
            self.failures()
        ));
        out
    }
}

pub fn cases() -> Vec<ExampleCase> {
    vec![
        ExampleCase { name: "first", summary: "type-2 language {101, 110}", run: case_first },
        ExampleCase { name: "even-vs-sft", summary: "even shift against {001}", run: case_even_vs_sft },
        ExampleCase { name: "not-same-sft", summary: "two type-1 languages on five symbols", run: case_not_same_sft },
        ExampleCase { name: "counter1", summary: "one unlabeled isomorphism, no lift", run: case_counter1 },
        ExampleCase { name: "counter2", summary: "two unlabeled isomorphisms, no lift", run: case_counter2 },
        ExampleCase { name: "even-vs-sft-irr", summary: "Fischer cover of the even shift", run: case_even_irr },
        ExampleCase { name: "final-00", summary: "{00}: cover equals the follower set graph", run: case_final_00 },
    ]
}

/// Runs the cases whose name equals `filter`, or contains it when none is
/// equal; an empty filter runs everything.
pub fn run_examples(filter: &str) -> Result<ExampleReport> {
    let all = cases();
    let exact: Vec<&ExampleCase> = all.iter().filter(|c| c.name == filter).collect();
    let chosen: Vec<&ExampleCase> =
        if exact.is_empty() { all.iter().filter(|c| c.name.contains(filter)).collect() } else { exact };
    if chosen.is_empty() {
        return Err(Error::InvalidArgument(format!("no example matches {filter:?}")));
    }
    Ok(ExampleReport { outcomes: chosen.iter().flat_map(|c| c.run()).collect() })
}

/// `src -label-> dst` lines in edge order.
pub fn edge_strings(g: &LabeledGraph) -> Vec<String> {
    g.edges()
        .iter()
        .map(|e| format!("{} -{}-> {}", g.vertex(e.src).id, g.alphabet().token(e.label), g.vertex(e.dst).id))
        .collect()
}

fn class_strings(g: &FollowerSetGraph) -> Vec<String> {
    g.vertex_partition()
        .iter()
        .map(|c| c.iter().map(|w| g.alphabet().display_word(w)).collect::<Vec<_>>().join(" "))
        .collect()
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn case_first(c: &mut Checks) -> Result<()> {
    let g = build_fsg(&first())?;
    c.equal("vertex count", g.vertex_count(), 5);
    c.equal(
        "follower classes",
        class_strings(&g),
        strs(&["∅", "0 00 000 001", "1 11 111", "01 010 011", "10 100"]),
    );
    c.equal(
        "edges",
        edge_strings(g.graph()),
        strs(&[
            "F(∅) -0-> F(0)",
            "F(∅) -1-> F(1)",
            "F(0) -0-> F(0)",
            "F(0) -1-> F(10)",
            "F(1) -0-> F(01)",
            "F(1) -1-> F(1)",
            "F(10) -0-> F(01)",
            "F(01) -0-> F(0)",
        ]),
    );
    c.expect("structural validation", validate_fsg(&g).passed(), "resolving, separated, reachable");
    let a = augment_with_zeta(&g, "z")?;
    c.equal("augmented vertex and edge counts", (a.vertex_count(), a.edge_count()), (5, 13));
    Ok(())
}

fn case_even_vs_sft(c: &mut Checks) -> Result<()> {
    let e = build_fsg_from_presentation(&even_shift())?;
    let spec = sft_001();
    let m = build_fsg(&spec)?;
    c.equal("even shift vertex count", e.vertex_count(), 3);
    c.equal("{001} classes", class_strings(&m), strs(&["∅ 0 00 000", "1 10 11 100 101 110 111", "01 010 011"]));
    c.equal(
        "{001} edges",
        edge_strings(m.graph()),
        strs(&["F(∅) -0-> F(∅)", "F(∅) -1-> F(1)", "F(1) -0-> F(01)", "F(1) -1-> F(1)", "F(01) -1-> F(1)"]),
    );
    c.equal("labeled isomorphism", labeled_isomorphism(&e, &m).is_some(), false);
    let Some(w) = unlabeled_isomorphism(&e, &m) else {
        c.expect("unlabeled isomorphism", false, "none found");
        return Ok(());
    };
    c.expect("unlabeled isomorphism", true, "witness found");
    let word = |s: &str| spec.parse_word(s);
    let f4 = lpc_word_bijection(&w, &e, &m, 4)?;
    let f3 = lpc_word_bijection(&w, &e, &m, 3)?;
    let f1 = lpc_word_bijection(&w, &e, &m, 1)?;
    let image = spec.format_word(&f4[&word("0010")?]);
    c.equal("f_4(0010)", image.as_str(), "1010");
    let split = spec.format_word(&f3[&word("010")?].after(&f1[&word("0")?]));
    c.expect("f_4(0010) differs from f_1(0) f_3(010)", split != image, format!("f_1(0) f_3(010) = {split}"));
    let (ge, gm) = (entropy_and_growth(&e, 12)?, entropy_and_growth(&m, 12)?);
    c.expect("|B_n| agree for n ≤ 12", ge.counts == gm.counts, format!("|B_12| = {}", gm.counts[12]));
    Ok(())
}

fn case_not_same_sft(c: &mut Checks) -> Result<()> {
    let (l, m) = not_same_sft();
    let (gl, gm) = (build_fsg(&l)?, build_fsg(&m)?);
    c.equal("vertex and edge counts", (gl.vertex_count(), gl.edge_count(), gm.vertex_count(), gm.edge_count()), (4, 12, 4, 12));
    c.equal("unlabeled isomorphism", unlabeled_isomorphism(&gl, &gm).is_some(), true);
    c.equal("labeled isomorphism", labeled_isomorphism(&gl, &gm).is_some(), false);
    c.equal(
        "follower sets injective on symbols",
        (follower_injective_on_symbols(&gl), follower_injective_on_symbols(&gm)),
        (false, false),
    );
    let both = |g: &FollowerSetGraph| g.vertex_of(&Word::from_ids(&[0])) == g.vertex_of(&Word::from_ids(&[1]));
    c.expect("F(1) = F(2) in both", both(&gl) && both(&gm), "");
    Ok(())
}

fn counter_case(
    c: &mut Checks,
    (l, m): (LanguageSpec, LanguageSpec),
    witnesses: usize,
    edges_l: &[&str],
    edges_m: &[&str],
) -> Result<()> {
    let (gl, gm) = (build_fsg(&l)?, build_fsg(&m)?);
    c.equal("first language edges", edge_strings(gl.graph()), strs(edges_l));
    c.equal("second language edges", edge_strings(gm.graph()), strs(edges_m));
    let all = all_unlabeled_isomorphisms(&gl, &gm);
    c.equal("unlabeled isomorphisms", all.len(), witnesses);
    c.equal("labeled isomorphisms", all_labeled_isomorphisms(&gl, &gm).len(), 0);
    let lifts = all.iter().filter(|w| lift_vertex_map(&gl, &gm, &w.vertex_map).is_some()).count();
    c.equal("witnesses that lift", lifts, 0);
    let (al, am) = (augment_with_zeta(&gl, "z")?, augment_with_zeta(&gm, "z")?);
    c.equal(
        "augmented graphs: unlabeled, labeled",
        (unlabeled_isomorphism(&al, &am).is_some(), labeled_isomorphism(&al, &am).is_some()),
        (true, false),
    );
    Ok(())
}

fn case_counter1(c: &mut Checks) -> Result<()> {
    counter_case(
        c,
        counter1(),
        1,
        &[
            "F(∅) -0-> F(0)",
            "F(∅) -1-> F(1)",
            "F(0) -0-> F(00)",
            "F(0) -1-> F(00)",
            "F(1) -0-> F(01)",
            "F(1) -1-> F(00)",
            "F(00) -1-> F(00)",
        ],
        &[
            "F(∅) -0-> F(0)",
            "F(∅) -1-> F(1)",
            "F(0) -0-> F(00)",
            "F(0) -1-> F(01)",
            "F(1) -0-> F(01)",
            "F(1) -1-> F(01)",
            "F(01) -1-> F(01)",
        ],
    )
}

fn case_counter2(c: &mut Checks) -> Result<()> {
    counter_case(
        c,
        counter2(),
        2,
        &[
            "F(∅) -0-> F(0)",
            "F(∅) -1-> F(1)",
            "F(0) -0-> F(00)",
            "F(0) -1-> F(10)",
            "F(1) -0-> F(01)",
            "F(1) -1-> F(00)",
            "F(10) -1-> F(00)",
            "F(01) -0-> F(00)",
        ],
        &[
            "F(∅) -0-> F(0)",
            "F(∅) -1-> F(1)",
            "F(0) -0-> F(00)",
            "F(0) -1-> F(01)",
            "F(1) -0-> F(01)",
            "F(1) -1-> F(11)",
            "F(00) -1-> F(01)",
            "F(11) -0-> F(01)",
        ],
    )
}

fn case_even_irr(c: &mut Checks) -> Result<()> {
    let e = build_fsg_from_presentation(&even_shift())?;
    let m = build_fsg(&sft_001())?;
    let cover = fischer_cover(&e)?;
    c.equal(
        "cover edges",
        edge_strings(&cover.graph),
        strs(&["F(1) -0-> F(01)", "F(1) -1-> F(1)", "F(01) -0-> F(1)"]),
    );
    c.equal("cover is irreducible", is_irreducible(&cover.graph)?, true);
    c.equal("{001} graph is irreducible", is_irreducible(m.graph())?, false);
    let w = unlabeled_isomorphism(&e, &m).ok_or_else(|| Error::InvalidArgument("no witness".into()))?;
    let image = transport_subgraph(&e, &m, &w, &cover.vertices)?;
    c.equal(
        "transported subgraph",
        edge_strings(&image),
        strs(&["F(1) -0-> F(01)", "F(1) -1-> F(1)", "F(01) -1-> F(1)"]),
    );
    let diff = first_language_difference(&image, m.graph(), default_language_bound(m.graph()))?;
    c.equal("first word length the subgraph misses", diff, Some(2));
    Ok(())
}

fn case_final_00(c: &mut Checks) -> Result<()> {
    let g = build_fsg(&sft_00())?;
    c.equal("vertex count", g.vertex_count(), 2);
    let cover = fischer_cover(&g)?;
    c.expect("cover equals the follower set graph", cover.graph == *g.graph(), "");
    c.equal("irreducible", cover.irreducibility.irreducible, true);
    let even_cover = fischer_cover(&build_fsg_from_presentation(&even_shift())?)?;
    let as_fsg = |gr: &LabeledGraph| FollowerSetGraph::from_parts(gr.clone(), None, Default::default());
    c.equal(
        "covers unlabeled isomorphic to the even shift's",
        unlabeled_isomorphism(&as_fsg(&cover.graph), &as_fsg(&even_cover.graph)).is_some(),
        true,
    );
    let e = build_fsg_from_presentation(&even_shift())?;
    c.equal("follower set graphs unlabeled isomorphic", unlabeled_isomorphism(&g, &e).is_some(), false);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_passes() {
        let r = run_examples("").unwrap();
        assert!(r.passed(), "{}", r.render());
        assert_eq!(r.outcomes.iter().map(|o| o.case).collect::<std::collections::BTreeSet<_>>().len(), 7);
    }

    #[test]
    fn filters() {
        let r = run_examples("counter2").unwrap();
        assert!(r.outcomes.iter().all(|o| o.case == "counter2"));
        assert!(r.outcomes.iter().any(|o| o.statement == "unlabeled isomorphisms" && o.detail == "2"));
        assert!(run_examples("nonesuch").is_err());
    }
}
