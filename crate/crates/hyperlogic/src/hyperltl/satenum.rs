//! Bounded-enumeration satisfiability search for HyperLTL sentences.
//!
//! The search enumerates finite sets of canonical lasso traces over the
//! sentence's own propositions, in a fixed deterministic order (total letter
//! count ascending, then lexicographic), and checks each candidate set. It
//! is a semi-procedure: `Found` comes with a verified model, `Exhausted`
//! only means no model exists within the budget.
//!
//! Two completeness-preserving optimizations keep the candidate space
//! tractable. The sentence is first split into variable-disjoint conjunctive
//! components, each evaluated with its own quantifier sub-prefix (quantifiers
//! distribute over conjuncts that do not mention them, for any mix of ∃/∀
//! over a non-empty set). Components whose sub-prefix is purely universal
//! must in particular hold on every diagonal tuple, so any trace that fails
//! such a component alone can never appear in a model and is dropped from
//! the universe up front.

use crate::error::{Error, Result};
use crate::hyperltl::check::check;
use crate::hyperltl::expansion::{build_expansion, eval_qf};
use crate::logic::{HyperLTLSentence, PropName, QfFormula, Quantifier, VarName};
use crate::models::{LassoTrace, Letter, TraceAssignment, TraceSet};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// Limits for the enumeration: at most `max_traces` traces per set, each
/// with a representation within `max_stem`/`max_loop`, and an optional
/// wall-clock limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_traces: usize,
    pub max_stem: usize,
    pub max_loop: usize,
    pub wall_limit: Option<Duration>,
}

impl SearchBudget {
    /// All three bounds must be at least 1.
    pub fn new(max_traces: usize, max_stem: usize, max_loop: usize) -> Result<Self> {
        if max_traces == 0 || max_stem == 0 || max_loop == 0 {
            return Err(Error::invalid("search budget bounds must be at least 1"));
        }
        Ok(SearchBudget {
            max_traces,
            max_stem,
            max_loop,
            wall_limit: None,
        })
    }

    pub fn with_wall_limit(mut self, limit: Duration) -> Self {
        self.wall_limit = Some(limit);
        self
    }
}

/// Result of a bounded satisfiability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A model, re-verified with the plain checker before being returned.
    Found(TraceSet),
    /// No model within the budget (not an unsatisfiability claim).
    Exhausted,
    /// The wall-clock limit expired first.
    TimedOut,
}

/// Outcome plus the number of candidate sets up to and including the
/// decisive one (deterministic for `Found`/`Exhausted` regardless of `jobs`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub sets_examined: u64,
}

/// One variable-disjoint conjunctive component of the sentence.
struct Component {
    prefix: Vec<(Quantifier, VarName)>,
    matrix: QfFormula,
    all_universal: bool,
}

/// Search for a model of `sentence` within `budget`, sequentially.
pub fn sat_enum(sentence: &HyperLTLSentence, budget: &SearchBudget) -> Result<SearchReport> {
    sat_enum_jobs(sentence, budget, 1)
}

/// Search with `jobs` worker threads. The outcome and the examined count are
/// identical to the sequential search: candidates are evaluated in chunks
/// and the enumeration-order-first hit wins.
pub fn sat_enum_jobs(
    sentence: &HyperLTLSentence,
    budget: &SearchBudget,
    jobs: usize,
) -> Result<SearchReport> {
    if jobs == 0 {
        return Err(Error::invalid("jobs must be at least 1"));
    }
    let deadline = budget.wall_limit.map(|d| Instant::now() + d);

    // Quantifiers over variables the matrix never mentions are no-ops over
    // non-empty sets; drop them before decomposing.
    let used = sentence.matrix.free_vars();
    let prefix: Vec<(Quantifier, VarName)> = sentence
        .prefix
        .iter()
        .filter(|(_, v)| used.contains(v))
        .cloned()
        .collect();

    let (components, constant_false) = decompose(&prefix, &sentence.matrix)?;
    if constant_false {
        return Ok(SearchReport {
            outcome: SearchOutcome::Exhausted,
            sets_examined: 0,
        });
    }

    let alphabet: Vec<PropName> = sentence.props().into_iter().collect();
    if alphabet.len() > 16 {
        return Err(Error::invalid(
            "satisfiability enumeration supports at most 16 propositions",
        ));
    }
    let universe = build_universe(&alphabet, budget.max_stem, budget.max_loop);

    let search = Search {
        universe: &universe,
        components: &components,
        memo: Mutex::new(HashMap::new()),
    };

    // Diagonal filter: keep only traces that alone satisfy every purely
    // universal component.
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..universe.len() {
        let mut ok = true;
        for (ci, comp) in components.iter().enumerate() {
            if comp.all_universal && !search.eval_component(ci, &[i], &mut Vec::new())? {
                ok = false;
                break;
            }
        }
        if ok {
            kept.push(i);
        }
    }

    let sizes: Vec<usize> = kept
        .iter()
        .map(|&i| universe[i].stem().len() + universe[i].loop_part().len())
        .collect();
    let max_total = budget.max_traces * (budget.max_stem + budget.max_loop);

    let pool = if jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };

    let mut examined: u64 = 0;
    for total in 1..=max_total {
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        gather_sets(
            &kept,
            &sizes,
            0,
            total,
            budget.max_traces,
            &mut Vec::new(),
            &mut candidates,
        );
        let chunk_size = (jobs * 4).max(1);
        for chunk in candidates.chunks(chunk_size) {
            if let Some(deadline) = deadline {
                if Instant::now() >= deadline {
                    return Ok(SearchReport {
                        outcome: SearchOutcome::TimedOut,
                        sets_examined: examined,
                    });
                }
            }
            let results: Vec<Result<bool>> = match &pool {
                Some(pool) => pool.install(|| {
                    chunk
                        .par_iter()
                        .map(|set| search.eval_set(set))
                        .collect()
                }),
                None => chunk.iter().map(|set| search.eval_set(set)).collect(),
            };
            for (off, r) in results.into_iter().enumerate() {
                if r? {
                    let model = materialize(&universe, &chunk[off], &alphabet);
                    if !check(sentence, &model)? {
                        return Err(Error::invalid(
                            "internal error: pruned search and direct check disagree",
                        ));
                    }
                    return Ok(SearchReport {
                        outcome: SearchOutcome::Found(model),
                        sets_examined: examined + off as u64 + 1,
                    });
                }
            }
            examined += chunk.len() as u64;
        }
    }
    Ok(SearchReport {
        outcome: SearchOutcome::Exhausted,
        sets_examined: examined,
    })
}

/// Split the (sugared) matrix into top-level conjuncts and group them into
/// variable-disjoint components carrying their restricted sub-prefixes.
/// Variable-free conjuncts are decided immediately; a false one makes the
/// whole sentence unsatisfiable (second return value).
fn decompose(
    prefix: &[(Quantifier, VarName)],
    matrix: &QfFormula,
) -> Result<(Vec<Component>, bool)> {
    let mut conjuncts: Vec<&QfFormula> = Vec::new();
    flatten_and(matrix, &mut conjuncts);

    let vars: Vec<VarName> = prefix.iter().map(|(_, v)| v.clone()).collect();
    let var_id: HashMap<&str, usize> = vars
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut uf: Vec<usize> = (0..vars.len()).collect();
    fn find(uf: &mut Vec<usize>, i: usize) -> usize {
        if uf[i] != i {
            let r = find(uf, uf[i]);
            uf[i] = r;
        }
        uf[i]
    }

    let mut constant_false = false;
    let mut grouped: Vec<(Option<usize>, &QfFormula)> = Vec::new();
    for conj in conjuncts {
        let free: Vec<usize> = conj
            .free_vars()
            .iter()
            .map(|v| *var_id.get(v.as_str()).expect("sentence is closed"))
            .collect();
        match free.first() {
            None => {
                if !eval_qf(conj, &TraceAssignment::new())? {
                    constant_false = true;
                }
            }
            Some(&first) => {
                for &other in &free[1..] {
                    let (a, b) = (find(&mut uf, first), find(&mut uf, other));
                    uf[a] = b;
                }
                grouped.push((Some(first), conj));
            }
        }
    }
    if constant_false {
        return Ok((Vec::new(), true));
    }

    // Components ordered by the first prefix variable they contain.
    let mut components: Vec<Component> = Vec::new();
    let mut root_to_comp: HashMap<usize, usize> = HashMap::new();
    for (vi, _) in vars.iter().enumerate() {
        let root = find(&mut uf, vi);
        if let std::collections::hash_map::Entry::Vacant(e) = root_to_comp.entry(root) {
            e.insert(components.len());
            let member_vars: BTreeSet<&str> = vars
                .iter()
                .enumerate()
                .filter(|(wi, _)| find(&mut uf, *wi) == root)
                .map(|(_, v)| v.as_str())
                .collect();
            let sub_prefix: Vec<(Quantifier, VarName)> = prefix
                .iter()
                .filter(|(_, v)| member_vars.contains(v.as_str()))
                .cloned()
                .collect();
            let parts: Vec<QfFormula> = grouped
                .iter()
                .filter(|(g, _)| g.map(|f| find(&mut uf, f)) == Some(root))
                .map(|(_, c)| (*c).clone())
                .collect();
            let all_universal = sub_prefix
                .iter()
                .all(|(q, _)| matches!(q, Quantifier::Forall));
            components.push(Component {
                prefix: sub_prefix,
                matrix: QfFormula::conj(parts).desugar(),
                all_universal,
            });
        }
    }
    Ok((components, false))
}

fn flatten_and<'a>(f: &'a QfFormula, out: &mut Vec<&'a QfFormula>) {
    match f {
        QfFormula::And(a, b) => {
            flatten_and(a, out);
            flatten_and(b, out);
        }
        other => out.push(other),
    }
}

/// All canonical lasso traces over subsets of `alphabet` with stem length at
/// most `s_max` and loop length at most `l_max`, ordered by (total length,
/// stem length, stem letters, loop letters) with letters compared as
/// bitmasks over the alphabet order.
fn build_universe(alphabet: &[PropName], s_max: usize, l_max: usize) -> Vec<LassoTrace> {
    let letter_count = 1usize << alphabet.len();
    let mut stems: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..s_max {
        let mut next = Vec::new();
        for stem in &frontier {
            for l in 0..letter_count {
                let mut s = stem.clone();
                s.push(l);
                next.push(s);
            }
        }
        stems.extend(next.iter().cloned());
        frontier = next;
    }
    let mut loops: Vec<Vec<usize>> = Vec::new();
    frontier = vec![Vec::new()];
    for _ in 0..l_max {
        let mut next = Vec::new();
        for lp in &frontier {
            for l in 0..letter_count {
                let mut s = lp.clone();
                s.push(l);
                next.push(s);
            }
        }
        loops.extend(next.iter().cloned());
        frontier = next;
    }

    let mut canon: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    for stem in &stems {
        for lp in &loops {
            canon.insert(crate::models::canonical_lasso(stem, lp));
        }
    }
    let mut keys: Vec<(Vec<usize>, Vec<usize>)> = canon.into_iter().collect();
    keys.sort_by_key(|(s, l)| (s.len() + l.len(), s.len(), s.clone(), l.clone()));

    let to_letter = |mask: usize| -> Letter {
        alphabet
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.clone())
            .collect()
    };
    keys.into_iter()
        .map(|(s, l)| {
            LassoTrace::new(
                s.into_iter().map(to_letter).collect(),
                l.into_iter().map(to_letter).collect(),
            )
            .expect("loop non-empty")
        })
        .collect()
}

/// Emit, in lexicographic order, every strictly increasing index sequence
/// over `kept` whose sizes sum to exactly `total`, with at most `max_count`
/// members.
fn gather_sets(
    kept: &[usize],
    sizes: &[usize],
    start: usize,
    total: usize,
    max_count: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if total == 0 {
        out.push(current.iter().map(|&k| kept[k]).collect());
        return;
    }
    if max_count == 0 {
        return;
    }
    for k in start..kept.len() {
        if sizes[k] <= total {
            current.push(k);
            gather_sets(kept, sizes, k + 1, total - sizes[k], max_count - 1, current, out);
            current.pop();
        }
    }
}

fn materialize(universe: &[LassoTrace], indices: &[usize], alphabet: &[PropName]) -> TraceSet {
    let alpha: BTreeSet<PropName> = alphabet.iter().cloned().collect();
    TraceSet::new(
        alpha,
        indices
            .iter()
            .enumerate()
            .map(|(i, &t)| (format!("t{}", i + 1), universe[t].clone())),
    )
    .expect("universe traces fit the alphabet")
}

struct Search<'a> {
    universe: &'a [LassoTrace],
    components: &'a [Component],
    /// Leaf cache: (component, bound universe indices) → matrix value.
    /// Matrix truth for a full tuple is independent of the candidate set, so
    /// entries are shared across sets and worker threads.
    memo: Mutex<HashMap<(usize, Vec<u32>), bool>>,
}

impl Search<'_> {
    fn eval_set(&self, set: &[usize]) -> Result<bool> {
        for ci in 0..self.components.len() {
            if !self.eval_component(ci, set, &mut Vec::new())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn eval_component(&self, ci: usize, set: &[usize], bound: &mut Vec<u32>) -> Result<bool> {
        let comp = &self.components[ci];
        if bound.len() == comp.prefix.len() {
            let key = (ci, bound.clone());
            if let Some(&v) = self.memo.lock().unwrap().get(&key) {
                return Ok(v);
            }
            let mut asg = TraceAssignment::new();
            for ((_, var), &ti) in comp.prefix.iter().zip(bound.iter()) {
                asg = asg.bind(var, self.universe[ti as usize].clone());
            }
            let v = build_expansion(&comp.matrix, &asg)?.value_at(0);
            self.memo.lock().unwrap().insert(key, v);
            return Ok(v);
        }
        let (q, _) = &comp.prefix[bound.len()];
        for &ti in set {
            bound.push(ti as u32);
            let sub = self.eval_component(ci, set, bound)?;
            bound.pop();
            match q {
                Quantifier::Exists if sub => return Ok(true),
                Quantifier::Forall if !sub => return Ok(false),
                _ => {}
            }
        }
        Ok(matches!(q, Quantifier::Forall))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_hyperltl, parse_sentence_comb, to_prenex};
    use crate::models::letter;

    fn run(src: &str, k: usize, s: usize, l: usize) -> SearchReport {
        let phi = parse_hyperltl(src).unwrap();
        sat_enum(&phi, &SearchBudget::new(k, s, l).unwrap()).unwrap()
    }

    #[test]
    fn finds_smallest_model_for_exists_atom() {
        let report = run("exists p. a[p]", 2, 1, 1);
        let SearchOutcome::Found(model) = &report.outcome else {
            panic!("expected a model");
        };
        assert_eq!(model.len(), 1);
        assert_eq!(
            model.get("t1").unwrap(),
            &LassoTrace::new(vec![], vec![letter(["a"])]).unwrap()
        );
        // The empty-letter loop is enumerated first and fails.
        assert_eq!(report.sets_examined, 2);
    }

    #[test]
    fn contradiction_exhausts() {
        let report = run("exists p. a[p] & !a[p]", 2, 1, 1);
        assert_eq!(report.outcome, SearchOutcome::Exhausted);
        // Universe: ∅^ω, a^ω, ∅·a^ω, a·∅^ω; sets of ≤ 2 of them: 10.
        assert_eq!(report.sets_examined, 10);
    }

    #[test]
    fn constant_false_short_circuits() {
        let report = run("exists p. a[p] & false", 3, 2, 2);
        assert_eq!(report.outcome, SearchOutcome::Exhausted);
        assert_eq!(report.sets_examined, 0);
    }

    #[test]
    fn unused_quantifier_dropped() {
        let report = run("exists p. exists q. a[p]", 2, 1, 1);
        let SearchOutcome::Found(model) = &report.outcome else {
            panic!("expected a model");
        };
        assert_eq!(model.len(), 1);
        assert_eq!(report.sets_examined, 2);
    }

    #[test]
    fn successor_chain_without_uniqueness_is_satisfiable() {
        // With x allowed at every position, the all-x loop satisfies both
        // conjuncts on its own.
        let comb = parse_sentence_comb(
            "(exists p. x[p]) & (forall p. exists q. F (x[p] & X x[q]))",
        )
        .unwrap();
        let phi = to_prenex(&comb);
        let report = sat_enum(&phi, &SearchBudget::new(2, 2, 2).unwrap()).unwrap();
        let SearchOutcome::Found(model) = &report.outcome else {
            panic!("expected a model");
        };
        assert_eq!(model.len(), 1);
        assert_eq!(
            model.get("t1").unwrap(),
            &LassoTrace::new(vec![], vec![letter(["x"])]).unwrap()
        );
    }

    #[test]
    fn successor_chain_with_uniqueness_exhausts() {
        // Adding "exactly one x per trace" makes every finite set fail: the
        // unique x-positions would have to be closed under +1.
        let comb = parse_sentence_comb(
            "(forall p. !x[p] U (x[p] & X G !x[p])) \
             & (exists p. x[p]) \
             & (forall p. exists q. F (x[p] & X x[q]))",
        )
        .unwrap();
        let phi = to_prenex(&comb);
        let report = sat_enum(&phi, &SearchBudget::new(2, 2, 1).unwrap()).unwrap();
        assert_eq!(report.outcome, SearchOutcome::Exhausted);
        // The diagonal filter for the universal component keeps only the
        // two traces with exactly one x: x·∅^ω and ∅x∅^ω.
        assert_eq!(report.sets_examined, 3);
    }

    #[test]
    fn parallel_search_matches_sequential() {
        let cases = [
            ("forall p. exists q. (a[p] <-> a[q]) & (X a[p] <-> X !a[q])", 3, 2, 1),
            ("exists p. a[p] & !a[p]", 2, 2, 1),
            ("exists p. exists q. F (a[p] & !a[q]) & F (!a[p] & a[q])", 2, 1, 2),
        ];
        for (src, k, s, l) in cases {
            let phi = parse_hyperltl(src).unwrap();
            let budget = SearchBudget::new(k, s, l).unwrap();
            let seq = sat_enum(&phi, &budget).unwrap();
            let par = sat_enum_jobs(&phi, &budget, 4).unwrap();
            assert_eq!(seq, par, "jobs must not change the report for {src}");
        }
    }

    #[test]
    fn zero_wall_limit_times_out() {
        let phi = parse_hyperltl("forall p. forall q. F (a[p] & a[q])").unwrap();
        let budget = SearchBudget::new(3, 3, 3)
            .unwrap()
            .with_wall_limit(Duration::ZERO);
        let report = sat_enum(&phi, &budget).unwrap();
        assert_eq!(report.outcome, SearchOutcome::TimedOut);
    }

    #[test]
    fn budget_validation() {
        assert!(SearchBudget::new(0, 1, 1).is_err());
        assert!(SearchBudget::new(1, 0, 1).is_err());
        assert!(SearchBudget::new(1, 1, 0).is_err());
    }
}
