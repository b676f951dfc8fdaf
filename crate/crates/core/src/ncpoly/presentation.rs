use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, RwLock};

use crate::error::{Result, SkeinError};
use crate::ncpoly::poly::NCPoly;
use crate::ncpoly::word::{Gen, Word};
use crate::scalar::{Ring, Scalar};

/// Default rewrite-step budget per normal-form call.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Boundary state of an arc endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// Matrix index: `+ ↦ 0`, `− ↦ 1`.
    pub fn index(self) -> usize {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn from_index(i: usize) -> Sign {
        if i == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn parse(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A named generator, optionally carrying a pair of states.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub states: Option<(Sign, Sign)>,
}

impl Generator {
    pub fn plain(name: &str) -> Generator {
        Generator { name: name.to_string(), states: None }
    }

    pub fn stated(name: &str, e: Sign, f: Sign) -> Generator {
        Generator { name: name.to_string(), states: Some((e, f)) }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.states {
            Some((a, b)) => write!(f, "{}[{},{}]", self.name, a.symbol(), b.symbol()),
            None => write!(f, "{}", self.name),
        }
    }
}

/// Oriented relation `lhs → rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

#[derive(Debug)]
enum Source {
    /// Rules are taken as given.
    Fixed,
    /// Rules are extended on demand by resolving overlaps degree by degree.
    Completing,
    /// Rules mirror a parent presentation with coefficients specialized.
    Derived(Arc<Presentation>),
}

#[derive(Debug)]
pub(crate) struct RuleState {
    rules: HashMap<Word, NCPoly>,
    lengths: Vec<usize>,
    pairs: Vec<bool>,
    width: usize,
    /// Overlaps of length up to the horizon are resolved; `None` when the
    /// rule set is final.
    horizon: Option<usize>,
    generation: u64,
    processed: HashSet<(Word, Word, usize)>,
    parent_generation: u64,
}

impl RuleState {
    fn new(width: usize, horizon: Option<usize>) -> RuleState {
        RuleState {
            rules: HashMap::new(),
            lengths: Vec::new(),
            pairs: vec![false; width * width],
            width,
            horizon,
            generation: 0,
            processed: HashSet::new(),
            parent_generation: u64::MAX,
        }
    }

    fn reindex(&mut self) {
        let mut lens: Vec<usize> = self.rules.keys().map(Word::len).collect();
        lens.sort_unstable();
        lens.dedup();
        self.lengths = lens;
        self.pairs = vec![false; self.width * self.width];
        for lhs in self.rules.keys() {
            let s = lhs.as_slice();
            if s.len() >= 2 {
                self.pairs[s[0] as usize * self.width + s[1] as usize] = true;
            }
        }
        self.generation += 1;
    }

    fn find_redex(&self, w: &[Gen]) -> Option<(usize, usize, &NCPoly)> {
        if w.len() < 2 {
            return None;
        }
        for i in 0..w.len() - 1 {
            if !self.pairs[w[i] as usize * self.width + w[i + 1] as usize] {
                continue;
            }
            for &l in &self.lengths {
                if i + l > w.len() {
                    break;
                }
                if let Some(r) = self.rules.get(&w[i..i + l]) {
                    return Some((i, l, r));
                }
            }
        }
        None
    }

    fn has_suffix_redex(&self, w: &[Gen]) -> bool {
        let n = w.len();
        self.lengths.iter().any(|&l| l <= n && self.rules.contains_key(&w[n - l..]))
    }

    fn sorted_rules(&self) -> Vec<Rule> {
        let mut v: Vec<Rule> = self.rules.iter().map(|(l, r)| Rule { lhs: l.clone(), rhs: r.clone() }).collect();
        v.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        v
    }
}

#[derive(Debug, Default)]
struct Cache {
    generation: u64,
    map: HashMap<Word, Arc<NCPoly>>,
}

const CACHE_CAP: usize = 4_000_000;

enum Memo<'a> {
    Shared(&'a Mutex<Cache>, u64),
    Local(HashMap<Word, Arc<NCPoly>>),
}

/// Leftmost-redex reducer with memoized word normal forms.
struct Reducer<'a> {
    rules: &'a RuleState,
    ring: Ring,
    steps: usize,
    budget: usize,
    memo: Memo<'a>,
}

impl<'a> Reducer<'a> {
    fn lookup(&self, w: &Word) -> Option<Arc<NCPoly>> {
        match &self.memo {
            Memo::Shared(m, generation) => {
                let c = m.lock().expect("cache lock");
                if c.generation == *generation {
                    c.map.get(w).cloned()
                } else {
                    None
                }
            }
            Memo::Local(m) => m.get(w).cloned(),
        }
    }

    fn store(&mut self, w: Word, p: Arc<NCPoly>) {
        match &mut self.memo {
            Memo::Shared(m, generation) => {
                let mut c = m.lock().expect("cache lock");
                if c.generation != *generation {
                    c.map.clear();
                    c.generation = *generation;
                }
                if c.map.len() >= CACHE_CAP {
                    c.map.clear();
                }
                c.map.insert(w, p);
            }
            Memo::Local(m) => {
                m.insert(w, p);
            }
        }
    }

    fn word(&mut self, w: &Word) -> Result<Arc<NCPoly>> {
        if w.len() < 2 {
            return Ok(Arc::new(NCPoly::monomial(w.clone(), Scalar::one(self.ring))));
        }
        if let Some(p) = self.lookup(w) {
            return Ok(p);
        }
        let rules = self.rules;
        let out = match rules.find_redex(w.as_slice()) {
            None => NCPoly::monomial(w.clone(), Scalar::one(self.ring)),
            Some((at, len, rhs)) => {
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(SkeinError::StepBudget(self.budget));
                }
                let mut acc = NCPoly::zero(self.ring);
                for (rw, c) in rhs.terms() {
                    let nw = w.splice(at, len, rw.as_slice());
                    let sub = self.word(&nw)?;
                    acc.add_assign_scaled(&sub, c);
                }
                acc
            }
        };
        let out = Arc::new(out);
        self.store(w.clone(), out.clone());
        Ok(out)
    }

    fn poly(&mut self, p: &NCPoly) -> Result<NCPoly> {
        let mut acc = NCPoly::zero(self.ring);
        for (w, c) in p.terms().rev() {
            let r = self.word(w)?;
            acc.add_assign_scaled(&r, c);
        }
        Ok(acc)
    }
}

/// Presentation of an algebra by generators and oriented rewrite rules.
///
/// Local generator indices double as precedence ranks, so the term order is
/// graded lexicographic on indices.
#[derive(Debug)]
pub struct Presentation {
    name: String,
    alphabet: Vec<Generator>,
    ring: Ring,
    budget: usize,
    source: Source,
    state: RwLock<RuleState>,
    cache: Mutex<Cache>,
}

impl Presentation {
    /// Presentation with the given rules, taken verbatim (no checks).
    pub fn fixed(name: &str, alphabet: Vec<Generator>, ring: Ring, rules: Vec<Rule>) -> Presentation {
        let mut st = RuleState::new(alphabet.len(), None);
        for r in rules {
            st.rules.insert(r.lhs, r.rhs);
        }
        st.reindex();
        Presentation::assemble(name, alphabet, ring, Source::Fixed, st)
    }

    /// Orient and interreduce relations (each relation is `= 0`).
    ///
    /// With `completing`, overlap resolution continues lazily to whatever word
    /// length later computations need; `horizon` is the length resolved up front.
    pub fn from_relations(
        name: &str,
        alphabet: Vec<Generator>,
        ring: Ring,
        relations: Vec<NCPoly>,
        completing: bool,
        horizon: usize,
    ) -> Result<Presentation> {
        let mut st = RuleState::new(alphabet.len(), if completing { Some(2) } else { None });
        st.reindex();
        let source = if completing { Source::Completing } else { Source::Fixed };
        {
            let mut queue: Vec<NCPoly> = relations;
            queue.reverse();
            while let Some(p) = queue.pop() {
                let (_, removed) = insert_relation(&mut st, ring, p, DEFAULT_BUDGET)?;
                queue.extend(removed);
            }
            normalize_rhs(&mut st, ring)?;
        }
        let p = Presentation::assemble(name, alphabet, ring, source, st);
        if completing {
            p.ensure_horizon(horizon)?;
        }
        Ok(p)
    }

    /// Mirror `parent` with coefficients specialized into `ring`.
    pub fn derived(parent: Arc<Presentation>, ring: Ring) -> Result<Presentation> {
        let st = RuleState::new(parent.alphabet.len(), parent.horizon());
        let (name, alphabet) = (parent.name.clone(), parent.alphabet.clone());
        let p = Presentation::assemble(&name, alphabet, ring, Source::Derived(parent), st);
        p.sync_from_parent()?;
        Ok(p)
    }

    fn assemble(name: &str, alphabet: Vec<Generator>, ring: Ring, source: Source, st: RuleState) -> Presentation {
        assert!(alphabet.len() <= 256, "alphabets are limited to 256 generators");
        Presentation {
            name: name.to_string(),
            alphabet,
            ring,
            budget: DEFAULT_BUDGET,
            source,
            state: RwLock::new(st),
            cache: Mutex::new(Cache::default()),
        }
    }

    /// Replace the rewrite-step budget.
    pub fn with_budget(mut self, budget: usize) -> Presentation {
        self.budget = budget;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &[Generator] {
        &self.alphabet
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Index of a generator by name and states.
    pub fn index_of(&self, g: &Generator) -> Option<usize> {
        self.alphabet.iter().position(|x| x == g)
    }

    /// Does this presentation extend its rules on demand?
    pub fn is_completing(&self) -> bool {
        !matches!(self.source, Source::Fixed)
    }

    /// Word length up to which overlaps are known to resolve; `None` for a
    /// fixed rule set, where every overlap is in scope.
    pub fn horizon(&self) -> Option<usize> {
        self.state.read().expect("rule lock").horizon
    }

    /// Snapshot of the current rules, sorted by left-hand side.
    pub fn rules(&self) -> Vec<Rule> {
        self.state.read().expect("rule lock").sorted_rules()
    }

    pub fn rule_count(&self) -> usize {
        self.state.read().expect("rule lock").rules.len()
    }

    /// Resolve overlaps up to word length `d` (no-op for fixed rule sets).
    pub fn ensure_horizon(&self, d: usize) -> Result<()> {
        match &self.source {
            Source::Fixed => Ok(()),
            Source::Completing => {
                if self.horizon().map_or(true, |h| h >= d) {
                    return Ok(());
                }
                let mut st = self.state.write().expect("rule lock");
                complete_to(&mut st, self.ring, d, self.budget)
            }
            Source::Derived(parent) => {
                parent.ensure_horizon(d)?;
                self.sync_from_parent()
            }
        }
    }

    fn sync_from_parent(&self) -> Result<()> {
        let Source::Derived(parent) = &self.source else { return Ok(()) };
        let pst = parent.state.read().expect("rule lock");
        {
            let st = self.state.read().expect("rule lock");
            if st.parent_generation == pst.generation {
                return Ok(());
            }
        }
        let mut st = self.state.write().expect("rule lock");
        st.rules.clear();
        for (lhs, rhs) in &pst.rules {
            st.rules.insert(lhs.clone(), rhs.specialize(self.ring)?);
        }
        st.horizon = pst.horizon;
        st.parent_generation = pst.generation;
        st.reindex();
        Ok(())
    }

    fn reducer<'a>(&'a self, st: &'a RuleState) -> Reducer<'a> {
        Reducer { rules: st, ring: self.ring, steps: 0, budget: self.budget, memo: Memo::Shared(&self.cache, st.generation) }
    }

    /// Normal form of a single local word.
    pub fn reduce_word(&self, w: &Word) -> Result<Arc<NCPoly>> {
        self.ensure_horizon(w.len())?;
        let st = self.state.read().expect("rule lock");
        self.reducer(&st).word(w)
    }

    /// Normal form of a polynomial in local words.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        if p.ring() != self.ring {
            return Err(SkeinError::RingMismatch(p.ring(), self.ring));
        }
        if let Some(&g) = p.terms().flat_map(|(w, _)| w.as_slice().iter()).find(|&&g| g as usize >= self.alphabet.len()) {
            return Err(SkeinError::UnknownGenerator(format!("local index {g} in `{}`", self.name)));
        }
        self.ensure_horizon(p.degree())?;
        let st = self.state.read().expect("rule lock");
        self.reducer(&st).poly(p)
    }

    /// Is the word free of rule left-hand sides?
    pub fn is_normal(&self, w: &Word) -> bool {
        self.state.read().expect("rule lock").find_redex(w.as_slice()).is_none()
    }

    /// All normal words of exactly length `d`, in ascending term order.
    pub fn normal_words(&self, d: usize) -> Result<Vec<Word>> {
        self.ensure_horizon(d)?;
        let st = self.state.read().expect("rule lock");
        let n = self.alphabet.len() as Gen;
        let mut out = Vec::new();
        let mut cur: Vec<Gen> = Vec::with_capacity(d);
        fn walk(st: &RuleState, n: Gen, d: usize, cur: &mut Vec<Gen>, out: &mut Vec<Word>) {
            if cur.len() == d {
                out.push(Word::from_slice(cur));
                return;
            }
            for g in 0..n {
                cur.push(g);
                if !st.has_suffix_redex(cur) {
                    walk(st, n, d, cur, out);
                }
                cur.pop();
            }
        }
        walk(&st, n, d, &mut cur, &mut out);
        Ok(out)
    }

    pub(crate) fn with_state<T>(&self, f: impl FnOnce(&RuleState) -> T) -> T {
        f(&self.state.read().expect("rule lock"))
    }

    /// Reduce `p` against an explicit rule state, bypassing the shared cache.
    pub(crate) fn reduce_with(&self, st: &RuleState, p: &NCPoly) -> Result<NCPoly> {
        let mut r = Reducer { rules: st, ring: self.ring, steps: 0, budget: self.budget, memo: Memo::Local(HashMap::new()) };
        r.poly(p)
    }

    /// Display a local word with this presentation's generator names.
    pub fn word_name(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.as_slice().iter().map(|&g| self.alphabet[g as usize].to_string()).collect::<Vec<_>>().join("*")
    }
}

impl RuleState {
    pub(crate) fn horizon_value(&self) -> Option<usize> {
        self.horizon
    }
}

/// Reduce `p`, and if nonzero, turn it into a rule. Returns the relations of
/// rules displaced because their left-hand side now contains the new one.
fn insert_relation(st: &mut RuleState, ring: Ring, p: NCPoly, budget: usize) -> Result<(Option<usize>, Vec<NCPoly>)> {
    let p = {
        let mut r = Reducer { rules: st, ring, steps: 0, budget, memo: Memo::Local(HashMap::new()) };
        r.poly(&p)?
    };
    let Some((lead, c)) = p.leading() else { return Ok((None, vec![])) };
    let lead = lead.clone();
    if lead.len() < 2 {
        return Err(SkeinError::Degenerate(format!("{:?}", p)));
    }
    let inv = c.invert_unit()?;
    let monic = p.scale(&inv);
    let mut rhs = NCPoly::zero(ring);
    for (w, x) in monic.terms() {
        if *w != lead {
            rhs.add_term(w.clone(), -x);
        }
    }
    let displaced: Vec<Word> =
        st.rules.keys().filter(|l| **l != lead && l.contains_factor(lead.as_slice())).cloned().collect();
    let mut back = Vec::new();
    for l in displaced {
        let r = st.rules.remove(&l).expect("displaced rule present");
        st.processed.retain(|(a, b, _)| *a != l && *b != l);
        let mut rel = NCPoly::monomial(l, Scalar::one(ring));
        rel = rel.sub(&r);
        back.push(rel);
    }
    let len = lead.len();
    st.rules.insert(lead, rhs);
    st.reindex();
    Ok((Some(len), back))
}

fn normalize_rhs(st: &mut RuleState, ring: Ring) -> Result<()> {
    let keys: Vec<Word> = st.rules.keys().cloned().collect();
    let mut fresh = Vec::with_capacity(keys.len());
    {
        let mut r = Reducer { rules: st, ring, steps: 0, budget: usize::MAX, memo: Memo::Local(HashMap::new()) };
        for k in &keys {
            fresh.push(r.poly(&st.rules[k])?);
        }
    }
    for (k, v) in keys.into_iter().zip(fresh) {
        st.rules.insert(k, v);
    }
    st.reindex();
    Ok(())
}

/// Overlaps `(l1, l2, k)`: the last `k` letters of `l1` are the first `k` of
/// `l2`, giving an ambiguous word of length `|l1| + |l2| − k`.
pub(crate) fn overlaps_of_length(st: &RuleState, deg: Option<usize>) -> Vec<(Word, Word, usize)> {
    let mut out = Vec::new();
    let mut lhss: Vec<&Word> = st.rules.keys().collect();
    lhss.sort();
    for l1 in &lhss {
        for l2 in &lhss {
            for k in 1..l1.len().min(l2.len()) {
                if let Some(d) = deg {
                    if l1.len() + l2.len() - k != d {
                        continue;
                    }
                }
                if l1.as_slice()[l1.len() - k..] == l2.as_slice()[..k] {
                    out.push(((*l1).clone(), (*l2).clone(), k));
                }
            }
        }
    }
    out
}

/// The two one-step resolutions of an overlap, before further reduction.
pub(crate) fn overlap_sides(st: &RuleState, ring: Ring, l1: &Word, l2: &Word, k: usize) -> (NCPoly, NCPoly) {
    let tail = &l2.as_slice()[k..];
    let head = &l1.as_slice()[..l1.len() - k];
    let r1 = &st.rules[l1];
    let r2 = &st.rules[l2];
    let mut left = NCPoly::zero(ring);
    for (w, c) in r1.terms() {
        left.add_term(w.concat(tail), c.clone());
    }
    let mut right = NCPoly::zero(ring);
    for (w, c) in r2.terms() {
        right.add_term(Word::from_slice(head).concat(w.as_slice()), c.clone());
    }
    (left, right)
}

fn complete_to(st: &mut RuleState, ring: Ring, d: usize, budget: usize) -> Result<()> {
    let start = st.horizon.unwrap_or(2);
    if start >= d {
        return Ok(());
    }
    let mut deg = 3.max(start + 1);
    let mut memo: HashMap<Word, Arc<NCPoly>> = HashMap::new();
    let mut memo_generation = st.generation;
    while deg <= d {
        let pending: Vec<_> =
            overlaps_of_length(st, Some(deg)).into_iter().filter(|o| !st.processed.contains(o)).collect();
        if pending.is_empty() {
            deg += 1;
            continue;
        }
        let mut shortest_new: Option<usize> = None;
        for (l1, l2, k) in pending {
            if !st.rules.contains_key(&l1) || !st.rules.contains_key(&l2) {
                continue;
            }
            st.processed.insert((l1.clone(), l2.clone(), k));
            if st.generation != memo_generation {
                memo.clear();
                memo_generation = st.generation;
            }
            let (left, right) = overlap_sides(st, ring, &l1, &l2, k);
            let s = {
                let mut r = Reducer { rules: st, ring, steps: 0, budget, memo: Memo::Local(std::mem::take(&mut memo)) };
                let s = r.poly(&left)?.sub(&r.poly(&right)?);
                if let Memo::Local(m) = r.memo {
                    memo = m;
                }
                s
            };
            if s.is_zero() {
                continue;
            }
            let mut queue = vec![s];
            while let Some(p) = queue.pop() {
                let (added, back) = insert_relation(st, ring, p, budget)?;
                if let Some(l) = added {
                    shortest_new = Some(shortest_new.map_or(l, |m: usize| m.min(l)));
                }
                queue.extend(back);
            }
        }
        if let Some(m) = shortest_new {
            deg = 3.max((m + 1).min(deg));
        }
    }
    normalize_rhs(st, ring)?;
    st.horizon = Some(d);
    st.generation += 1;
    Ok(())
}
