//! Words, forbidden-word sets and factorial languages.
//!
//! Words are stored in printed order: the leftmost symbol comes first. The
//! rightmost symbol is the *first* letter in the sense of the dynamics, so a
//! word `μ = μ_k … μ_1` is read right to left when traced as a path, and the
//! concatenation `wμ` places `w` to the left of `μ`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A symbol is a dense index into an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Ordered list of distinct, nonempty display tokens.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    tokens: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for t in &tokens {
            if t.is_empty() || t.chars().any(char::is_whitespace) {
                return Err(Error::AlphabetMismatch(format!("invalid symbol token {t:?}")));
            }
            if t == "∅" {
                return Err(Error::AlphabetMismatch("'∅' is reserved for the empty word".into()));
            }
            if !seen.insert(t.as_str()) {
                return Err(Error::AlphabetMismatch(format!("duplicate symbol token {t:?}")));
            }
        }
        Ok(Alphabet { tokens })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, s: Symbol) -> &str {
        &self.tokens[s.index()]
    }

    pub fn symbol(&self, token: &str) -> Option<Symbol> {
        self.tokens.iter().position(|t| t == token).map(|i| Symbol(i as u32))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.tokens.len()).map(|i| Symbol(i as u32))
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.tokens.len()
    }

    /// Appends a fresh token, returning the enlarged alphabet and the new symbol.
    pub fn with_token(&self, token: &str) -> Result<(Alphabet, Symbol)> {
        if self.symbol(token).is_some() {
            return Err(Error::AlphabetMismatch(format!("symbol {token:?} already in alphabet")));
        }
        let mut tokens = self.tokens.clone();
        tokens.push(token.to_string());
        let alphabet = Alphabet::new(tokens)?;
        Ok((alphabet, Symbol(self.tokens.len() as u32)))
    }

    /// True when every token is a single character, so words can be written
    /// without separators.
    pub fn is_compact(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses a word in printed form. `""` and `"∅"` denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        let mut symbols = Vec::new();
        if text.is_empty() || text == "∅" {
            return Ok(Word::empty());
        }
        for chunk in text.split_whitespace() {
            if let Some(s) = self.symbol(chunk) {
                symbols.push(s);
            } else if self.is_compact() {
                for c in chunk.chars() {
                    let mut buf = [0u8; 4];
                    let s = self.symbol(c.encode_utf8(&mut buf)).ok_or_else(|| {
                        Error::AlphabetMismatch(format!("unknown symbol {c:?} in word {text:?}"))
                    })?;
                    symbols.push(s);
                }
            } else {
                return Err(Error::AlphabetMismatch(format!(
                    "unknown symbol {chunk:?} in word {text:?}"
                )));
            }
        }
        Ok(Word(symbols))
    }

    /// Printed form of a word; `""` for the empty word.
    pub fn format_word(&self, w: &Word) -> String {
        let sep = if self.is_compact() { "" } else { " " };
        w.0.iter().map(|s| self.token(*s)).collect::<Vec<_>>().join(sep)
    }

    /// Like [`Alphabet::format_word`] but renders the empty word as `∅`.
    pub fn display_word(&self, w: &Word) -> String {
        if w.is_empty() {
            "∅".to_string()
        } else {
            self.format_word(w)
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|s| !self.contains(**s)) {
            Some(s) => Err(Error::AlphabetMismatch(format!(
                "symbol id {} outside alphabet of size {}",
                s.0,
                self.len()
            ))),
            None => Ok(()),
        }
    }
}

/// A finite word in printed (left-to-right) order.
///
/// Ordering is shortlex: shorter words first, ties broken lexicographically on
/// symbol ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// Builds a word from raw symbol ids in printed order.
    pub fn from_ids(ids: &[u32]) -> Self {
        Word(ids.iter().map(|&i| Symbol(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// Symbols in the order a path reads them: rightmost first.
    pub fn path_order(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().rev().copied()
    }

    /// `iμ`: the symbol placed to the left.
    pub fn prepend(&self, s: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(s);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// `μi`: the symbol placed to the right.
    pub fn append(&self, s: Symbol) -> Word {
        let mut v = self.0.clone();
        v.push(s);
        Word(v)
    }

    /// `wμ` with `w = left` and `μ = self`.
    pub fn after(&self, left: &Word) -> Word {
        let mut v = left.0.clone();
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// The leftmost `n` symbols.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        if factor.is_empty() {
            return true;
        }
        factor.len() <= self.len() && self.0.windows(factor.len()).any(|w| w == factor.0.as_slice())
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// Contiguous factor `self[start..start+len]`.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    /// Applies a symbol map position-wise.
    pub fn map_symbols(&self, f: impl Fn(Symbol) -> Symbol) -> Word {
        Word(self.0.iter().map(|s| f(*s)).collect())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

/// How words are written at the I/O boundary.
///
/// `Left` is the native orientation. `Right` reverses every word on read and
/// write, for inputs written with right concatenation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    #[default]
    Left,
    Right,
}

impl Convention {
    pub fn orient(self, w: Word) -> Word {
        match self {
            Convention::Left => w,
            Convention::Right => w.reversed(),
        }
    }
}

/// The type of a language given by forbidden words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LanguageType {
    /// No forbidden words: the free semigroup.
    Free,
    /// The longest basis word has length `k + 1`.
    Finite(usize),
}

impl LanguageType {
    pub fn k(self) -> Option<usize> {
        match self {
            LanguageType::Free => None,
            LanguageType::Finite(k) => Some(k),
        }
    }
}

impl fmt::Display for LanguageType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LanguageType::Free => f.write_str("free"),
            LanguageType::Finite(k) => write!(f, "{k}"),
        }
    }
}

/// A finite set of forbidden words together with its minimal basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSet {
    words: BTreeSet<Word>,
    basis: BTreeSet<Word>,
}

impl ForbiddenSet {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        if words.iter().any(Word::is_empty) {
            return Err(Error::InvalidForbiddenWord("the empty word cannot be forbidden".into()));
        }
        let basis = words
            .iter()
            .filter(|w| !words.iter().any(|v| v != *w && w.contains_factor(v)))
            .cloned()
            .collect();
        Ok(ForbiddenSet { words, basis })
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn basis(&self) -> &BTreeSet<Word> {
        &self.basis
    }

    pub fn language_type(&self) -> LanguageType {
        match self.basis.iter().map(Word::len).max() {
            None => LanguageType::Free,
            Some(m) => LanguageType::Finite(m - 1),
        }
    }

    /// True when some basis word occurs in `mu`.
    pub fn forbids(&self, mu: &Word) -> bool {
        self.basis.iter().any(|b| mu.contains_factor(b))
    }

    /// True when some basis word is a prefix of `mu`. For a word whose proper
    /// right factor is already allowable this is exactly forbiddenness.
    fn forbids_prefix(&self, mu: &Word) -> bool {
        self.basis.iter().any(|b| mu.starts_with(b))
    }
}

/// Returns the forbidden set reduced to its basis. Idempotent.
pub fn minimal_basis(fs: &ForbiddenSet) -> ForbiddenSet {
    ForbiddenSet { words: fs.basis.clone(), basis: fs.basis.clone() }
}

pub fn language_type(fs: &ForbiddenSet) -> LanguageType {
    fs.language_type()
}

/// How a language is described.
#[derive(Clone, Debug)]
pub enum Backend {
    Forbidden(ForbiddenSet),
    /// The language of all finite path labels of a labeled graph.
    Presentation(LabeledGraph),
}

/// A factorial language over an alphabet in which every single symbol is allowable.
#[derive(Clone, Debug)]
pub struct LanguageSpec {
    alphabet: Alphabet,
    backend: Backend,
    name: Option<String>,
    dropped: Vec<String>,
}

impl LanguageSpec {
    /// A finite-type language. Symbols that are themselves forbidden are
    /// removed from the alphabet and recorded in [`LanguageSpec::dropped_symbols`].
    pub fn finite_type(alphabet: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            alphabet.check_word(w)?;
        }
        let fs = ForbiddenSet::new(words)?;
        let dead: BTreeSet<Symbol> =
            fs.basis().iter().filter(|w| w.len() == 1).map(|w| w.symbols()[0]).collect();
        if dead.is_empty() {
            return Ok(LanguageSpec { alphabet, backend: Backend::Forbidden(fs), name: None, dropped: Vec::new() });
        }
        if dead.len() == alphabet.len() {
            return Err(Error::EmptyLanguage("every symbol is forbidden".into()));
        }
        let (shrunk, remap, dropped) = shrink_alphabet(&alphabet, &dead)?;
        let kept = fs
            .words()
            .iter()
            .filter(|w| w.symbols().iter().all(|s| !dead.contains(s)))
            .map(|w| w.map_symbols(|s| remap[&s]));
        let fs = ForbiddenSet::new(kept)?;
        Ok(LanguageSpec { alphabet: shrunk, backend: Backend::Forbidden(fs), name: None, dropped })
    }

    /// Convenience constructor from printed tokens and words.
    pub fn from_strs(tokens: &[&str], forbidden: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(tokens.iter().copied())?;
        let words = forbidden.iter().map(|w| alphabet.parse_word(w)).collect::<Result<Vec<_>>>()?;
        if words.iter().any(Word::is_empty) {
            return Err(Error::InvalidForbiddenWord("the empty word cannot be forbidden".into()));
        }
        LanguageSpec::finite_type(alphabet, words)
    }

    /// The language of finite path labels of `graph`. Symbols labeling no
    /// edge are removed from the alphabet.
    pub fn from_presentation(graph: LabeledGraph) -> Result<Self> {
        if graph.edges().is_empty() {
            return Err(Error::EmptyLanguage("presentation has no edges".into()));
        }
        let used: BTreeSet<Symbol> = graph.edges().iter().map(|e| e.label).collect();
        let dead: BTreeSet<Symbol> = graph.alphabet().symbols().filter(|s| !used.contains(s)).collect();
        if dead.is_empty() {
            let alphabet = graph.alphabet().clone();
            return Ok(LanguageSpec { alphabet, backend: Backend::Presentation(graph), name: None, dropped: Vec::new() });
        }
        let (shrunk, remap, dropped) = shrink_alphabet(graph.alphabet(), &dead)?;
        let graph = graph.relabel(shrunk.clone(), |s| remap[&s]);
        Ok(LanguageSpec { alphabet: shrunk, backend: Backend::Presentation(graph), name: None, dropped })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Tokens removed from the input alphabet because no word used them.
    pub fn dropped_symbols(&self) -> &[String] {
        &self.dropped
    }

    pub fn forbidden_set(&self) -> Option<&ForbiddenSet> {
        match &self.backend {
            Backend::Forbidden(fs) => Some(fs),
            Backend::Presentation(_) => None,
        }
    }

    /// The type, for forbidden-set languages.
    pub fn language_type(&self) -> Option<LanguageType> {
        self.forbidden_set().map(ForbiddenSet::language_type)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format_word(w)
    }
}

fn shrink_alphabet(
    alphabet: &Alphabet,
    dead: &BTreeSet<Symbol>,
) -> Result<(Alphabet, BTreeMap<Symbol, Symbol>, Vec<String>)> {
    let mut remap = BTreeMap::new();
    let mut tokens = Vec::new();
    let mut dropped = Vec::new();
    for s in alphabet.symbols() {
        if dead.contains(&s) {
            dropped.push(alphabet.token(s).to_string());
        } else {
            remap.insert(s, Symbol(tokens.len() as u32));
            tokens.push(alphabet.token(s).to_string());
        }
    }
    Ok((Alphabet::new(tokens)?, remap, dropped))
}

/// Membership in the language. The empty word is always allowable.
pub fn is_allowable(spec: &LanguageSpec, mu: &Word) -> Result<bool> {
    spec.alphabet.check_word(mu)?;
    Ok(match &spec.backend {
        Backend::Forbidden(fs) => !fs.forbids(mu),
        Backend::Presentation(g) => !g.reach_set(mu).is_empty(),
    })
}

/// `B_n`: the allowable words of length `n`.
pub fn enumerate_allowable(spec: &LanguageSpec, n: usize) -> BTreeSet<Word> {
    enumerate_layers(spec, n).pop().unwrap_or_default()
}

/// `B_0, …, B_n`, built by extending each layer on the left.
pub fn enumerate_layers(spec: &LanguageSpec, n: usize) -> Vec<BTreeSet<Word>> {
    let d = spec.alphabet.len();
    let mut layers = Vec::with_capacity(n + 1);
    match &spec.backend {
        Backend::Forbidden(fs) => {
            let mut cur: BTreeSet<Word> = std::iter::once(Word::empty()).collect();
            layers.push(cur.clone());
            for _ in 0..n {
                let mut next = BTreeSet::new();
                for mu in &cur {
                    for i in 0..d {
                        let w = mu.prepend(Symbol(i as u32));
                        if !fs.forbids_prefix(&w) {
                            next.insert(w);
                        }
                    }
                }
                layers.push(next.clone());
                cur = next;
            }
        }
        Backend::Presentation(g) => {
            let mut cur: Vec<(Word, Vec<usize>)> = vec![(Word::empty(), (0..g.vertex_count()).collect())];
            layers.push(std::iter::once(Word::empty()).collect());
            for _ in 0..n {
                let mut next = Vec::new();
                for (mu, set) in &cur {
                    for i in 0..d {
                        let s = Symbol(i as u32);
                        let t = g.step_set(set, s);
                        if !t.is_empty() {
                            next.push((mu.prepend(s), t));
                        }
                    }
                }
                layers.push(next.iter().map(|(w, _)| w.clone()).collect());
                cur = next;
            }
        }
    }
    layers
}

/// A partition of words into classes. Each class is sorted shortlex and the
/// classes are sorted by their least element.
pub type WordPartition = Vec<Vec<Word>>;

pub(crate) fn partition_by_key<K: Ord>(words: impl IntoIterator<Item = (Word, K)>) -> WordPartition {
    let mut classes: BTreeMap<K, Vec<Word>> = BTreeMap::new();
    for (w, k) in words {
        classes.entry(k).or_default().push(w);
    }
    let mut out: WordPartition = classes
        .into_values()
        .map(|mut c| {
            c.sort();
            c
        })
        .collect();
    out.sort_by(|a, b| a[0].cmp(&b[0]));
    out
}

/// Partitions the allowable words of length at most `k + 1` by the set of
/// words `w` of length at most `k` with `wμ` allowable.
///
/// Every key is computed by direct membership tests, so this is an oracle
/// for the graph builder rather than a fast path.
pub fn follower_classes_bruteforce(spec: &LanguageSpec, k: usize) -> Result<WordPartition> {
    let fs = match &spec.backend {
        Backend::Forbidden(fs) => fs,
        Backend::Presentation(_) => {
            return Err(Error::UnsupportedBackend(
                "brute-force follower classes need a finite forbidden set".into(),
            ))
        }
    };
    if let LanguageType::Finite(t) = fs.language_type() {
        if t > k {
            return Err(Error::InvalidArgument(format!("language has type {t} > k = {k}")));
        }
    }
    let d = spec.alphabet.len() as u32;
    let all_words = |max: usize| {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max {
            layer = layer.iter().flat_map(|w| (0..d).map(move |i| w.append(Symbol(i)))).collect();
            out.extend(layer.iter().cloned());
        }
        out
    };
    let prefixes: Vec<Word> = all_words(k).into_iter().filter(|w| !fs.forbids(w)).collect();
    let keyed = all_words(k + 1).into_iter().filter(|mu| !fs.forbids(mu)).map(|mu| {
        let key: Vec<bool> = prefixes.iter().map(|w| !fs.forbids(&mu.after(w))).collect();
        (mu, key)
    });
    Ok(partition_by_key(keyed))
}

/// Parses the forbidden-word text format:
///
/// ```text
/// alphabet: 0 1
/// # comment
/// 101
/// 110
/// ```
pub fn parse_forbidden_file(text: &str, convention: Convention) -> Result<LanguageSpec> {
    let mut alphabet: Option<Alphabet> = None;
    let mut words = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match &alphabet {
            None => {
                let rest = line.strip_prefix("alphabet:").ok_or_else(|| Error::Parse {
                    line: lineno + 1,
                    message: "expected `alphabet: tok1 tok2 …` as the first line".into(),
                })?;
                alphabet = Some(Alphabet::new(rest.split_whitespace()).map_err(|e| Error::Parse {
                    line: lineno + 1,
                    message: e.to_string(),
                })?);
            }
            Some(a) => {
                let w = a.parse_word(line).map_err(|e| Error::Parse { line: lineno + 1, message: e.to_string() })?;
                if w.is_empty() {
                    return Err(Error::InvalidForbiddenWord(format!("line {}: empty word", lineno + 1)));
                }
                words.push(convention.orient(w));
            }
        }
    }
    let alphabet = alphabet.ok_or_else(|| Error::Parse { line: 1, message: "missing alphabet line".into() })?;
    if alphabet.is_empty() {
        return Err(Error::Parse { line: 1, message: "alphabet is empty".into() });
    }
    LanguageSpec::finite_type(alphabet, words)
}

/// Writes a forbidden set back in the text format.
pub fn format_forbidden_file(spec: &LanguageSpec, convention: Convention) -> Result<String> {
    let fs = spec
        .forbidden_set()
        .ok_or_else(|| Error::UnsupportedBackend("not a forbidden-set language".into()))?;
    let mut out = format!("alphabet: {}\n", spec.alphabet.tokens().join(" "));
    for w in fs.basis() {
        out.push_str(&spec.alphabet.format_word(&convention.orient(w.clone())));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(tokens: &[&str], words: &[&str]) -> LanguageSpec {
        LanguageSpec::from_strs(tokens, words).unwrap()
    }

    fn words(spec: &LanguageSpec, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| spec.parse_word(w).unwrap()).collect()
    }

    #[test]
    fn basis_drops_superwords() {
        let a = Alphabet::new(["0", "1"]).unwrap();
        let fs = ForbiddenSet::new([a.parse_word("11").unwrap(), a.parse_word("110").unwrap()]).unwrap();
        let b: Vec<_> = fs.basis().iter().map(|w| a.format_word(w)).collect();
        assert_eq!(b, ["11"]);
        assert_eq!(minimal_basis(&minimal_basis(&fs)), minimal_basis(&fs));

        let fs = ForbiddenSet::new([a.parse_word("101").unwrap(), a.parse_word("110").unwrap()]).unwrap();
        assert_eq!(fs.basis().len(), 2);
        assert_eq!(language_type(&fs), LanguageType::Finite(2));

        let fs = ForbiddenSet::new([]).unwrap();
        assert!(fs.basis().is_empty());
        assert_eq!(language_type(&fs), LanguageType::Free);
    }

    #[test]
    fn empty_forbidden_word_is_rejected() {
        assert!(matches!(ForbiddenSet::new([Word::empty()]), Err(Error::InvalidForbiddenWord(_))));
        assert!(LanguageSpec::from_strs(&["0"], &[""]).is_err());
    }

    #[test]
    fn type_of_golden_mean() {
        assert_eq!(spec(&["0", "1"], &["11"]).language_type(), Some(LanguageType::Finite(1)));
    }

    #[test]
    fn membership() {
        let s = spec(&["0", "1"], &["101", "110"]);
        assert!(is_allowable(&s, &s.parse_word("1001").unwrap()).unwrap());
        assert!(!is_allowable(&s, &s.parse_word("0101").unwrap()).unwrap());
        assert!(is_allowable(&s, &Word::empty()).unwrap());
        assert!(matches!(is_allowable(&s, &Word::from_ids(&[7])), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn enumeration_small_cases() {
        let s = spec(&["0", "1"], &["11"]);
        let b2: Vec<_> = enumerate_allowable(&s, 2).iter().map(|w| s.format_word(w)).collect();
        assert_eq!(b2, ["00", "01", "10"]);
        assert_eq!(enumerate_allowable(&s, 0).len(), 1);

        let s = spec(&["0", "1"], &["001"]);
        let b3 = enumerate_allowable(&s, 3);
        assert_eq!(b3.len(), 7);
        assert!(!b3.contains(&s.parse_word("001").unwrap()));
    }

    #[test]
    fn bruteforce_classes_first_example() {
        let s = spec(&["0", "1"], &["101", "110"]);
        let p = follower_classes_bruteforce(&s, 2).unwrap();
        let expect = vec![
            words(&s, &[""]),
            words(&s, &["0", "00", "000", "001"]),
            words(&s, &["1", "11", "111"]),
            words(&s, &["01", "010", "011"]),
            words(&s, &["10", "100"]),
        ];
        assert_eq!(p, expect);
    }

    #[test]
    fn bruteforce_classes_001() {
        let s = spec(&["0", "1"], &["001"]);
        let p = follower_classes_bruteforce(&s, 2).unwrap();
        let expect = vec![
            words(&s, &["", "0", "00", "000"]),
            words(&s, &["1", "10", "11", "100", "101", "110", "111"]),
            words(&s, &["01", "010", "011"]),
        ];
        assert_eq!(p, expect);
    }

    #[test]
    fn bruteforce_classes_free() {
        let s = spec(&["a", "b"], &[]);
        let p = follower_classes_bruteforce(&s, 0).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].len(), 3);
    }

    #[test]
    fn bruteforce_rejects_small_k() {
        let s = spec(&["0", "1"], &["101"]);
        assert!(matches!(follower_classes_bruteforce(&s, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn forbidden_symbol_shrinks_alphabet() {
        let s = spec(&["a", "b", "c"], &["b", "ab", "ca"]);
        assert_eq!(s.alphabet().tokens(), ["a", "c"]);
        assert_eq!(s.dropped_symbols(), ["b"]);
        let basis: Vec<_> = s.forbidden_set().unwrap().basis().iter().map(|w| s.format_word(w)).collect();
        assert_eq!(basis, ["ca"]);
        assert!(matches!(LanguageSpec::from_strs(&["a"], &["a"]), Err(Error::EmptyLanguage(_))));
    }

    #[test]
    fn file_format_roundtrip() {
        let text = "# the first example\nalphabet: 0 1\n101\n1 1 0\n";
        let s = parse_forbidden_file(text, Convention::Left).unwrap();
        assert_eq!(s.forbidden_set().unwrap().basis().len(), 2);
        let out = format_forbidden_file(&s, Convention::Left).unwrap();
        assert_eq!(out, "alphabet: 0 1\n101\n110\n");

        let r = parse_forbidden_file("alphabet: 0 1\n001\n", Convention::Right).unwrap();
        let basis: Vec<_> = r.forbidden_set().unwrap().basis().iter().map(|w| r.format_word(w)).collect();
        assert_eq!(basis, ["100"]);
    }

    #[test]
    fn multi_char_tokens() {
        let a = Alphabet::new(["ab", "c"]).unwrap();
        let w = a.parse_word("ab c ab").unwrap();
        assert_eq!(w, Word::from_ids(&[0, 1, 0]));
        assert_eq!(a.format_word(&w), "ab c ab");
        assert!(a.parse_word("abc").is_err());
    }

    #[test]
    fn file_errors() {
        assert!(matches!(parse_forbidden_file("101\n", Convention::Left), Err(Error::Parse { .. })));
        assert!(matches!(parse_forbidden_file("alphabet: 0 1\n102\n", Convention::Left), Err(Error::Parse { .. })));
    }
}
