//! The acceptance suite: numbered criteria, each a list of claims with the
//! expected and computed values.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::aut::{graph_automorphism_count, graph_automorphisms};
use crate::corpus::{all_graphs, random_graphs, standard_corpus};
use crate::error::Result;
use crate::evolution::{evolution_algebra, induced_algebra_map, induced_basis_permutation, Matrix};
use crate::field::Rational;
use crate::graph::Graph;
use crate::monoid::{
    check_graph_monoid, monoid_automorphisms, monoid_automorphisms_bruteforce, monoid_extension,
    monoid_from_graph,
};
use crate::partial_group::{
    check_partial_group_axioms, partial_automorphisms, partial_automorphisms_bruteforce,
    partial_group_extension, reduce_word, PartialGroup, PartialGroupOps,
};
use crate::perm::{factorial, PermSet, Permutation};
use crate::poset::{
    face_poset, poset_automorphisms, poset_automorphisms_bruteforce, poset_extension,
};
use crate::realize::{materialize, plan, plan_with_scale, verify, Target, DEFAULT_VERTEX_BUDGET};

pub const CRITERIA: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Smaller random samples and no structure-level enumeration at scale.
    pub quick: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 2024,
            quick: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClaimRow {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: u8,
    pub title: &'static str,
    pub rows: Vec<ClaimRow>,
    pub elapsed: Duration,
    pub time_limit: Option<Duration>,
}

impl CriterionResult {
    pub fn within_time(&self) -> bool {
        self.time_limit.map_or(true, |limit| self.elapsed <= limit)
    }

    pub fn passed(&self) -> bool {
        self.within_time() && !self.rows.is_empty() && self.rows.iter().all(|r| r.passed)
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] criterion {}: {} ({:.2?}",
            self.number, self.title, self.elapsed
        )?;
        match self.time_limit {
            Some(limit) => write!(f, ", limit {limit:?})"),
            None => write!(f, ")"),
        }
    }
}

#[derive(Default)]
struct Rows(Vec<ClaimRow>);

impl Rows {
    fn check(
        &mut self,
        claim: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
    ) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.0.push(ClaimRow {
            claim: claim.into(),
            passed: expected == computed,
            expected,
            computed,
        });
    }

    fn assert(&mut self, claim: impl Into<String>, holds: bool, detail: impl ToString) {
        self.0.push(ClaimRow {
            claim: claim.into(),
            expected: "true".into(),
            computed: if holds {
                "true".into()
            } else {
                format!("false: {}", detail.to_string())
            },
            passed: holds,
        });
    }

    fn error(&mut self, claim: impl Into<String>, e: impl fmt::Display) {
        self.0.push(ClaimRow {
            claim: claim.into(),
            expected: "no error".into(),
            computed: format!("error: {e}"),
            passed: false,
        });
    }

    /// Keeps failing rows individually and folds passing ones into a single
    /// counted row.
    fn summarize(&mut self, claim: &str, rows: Vec<ClaimRow>) {
        let total = rows.len();
        let failed: Vec<ClaimRow> = rows.into_iter().filter(|r| !r.passed).collect();
        self.check(
            format!("{claim}: cases passing"),
            total,
            total - failed.len(),
        );
        self.0.extend(failed);
    }
}

pub fn title(number: u8) -> &'static str {
    match number {
        1 => "graph family automorphism orders",
        2 => "size formulas on random graphs",
        3 => "automorphism preservation on the corpus",
        4 => "pruned enumeration equals brute force",
        5 => "partial-group axioms and mutants",
        6 => "evolution algebra regularity and induced automorphisms",
        7 => "desk-scale realizations",
        8 => "symbolic plans on random rationals",
        9 => "documented discrepancies",
        _ => "unknown criterion",
    }
}

fn time_limit(number: u8) -> Option<Duration> {
    match number {
        1 => Some(Duration::from_secs(5)),
        3 => Some(Duration::from_secs(120)),
        7 => Some(Duration::from_secs(600)),
        8 => Some(Duration::from_secs(10)),
        _ => None,
    }
}

pub fn run_criterion(number: u8, opts: &SuiteOptions) -> CriterionResult {
    let start = Instant::now();
    let rows = match number {
        1 => criterion_1(),
        2 => criterion_2(opts),
        3 => criterion_3(opts),
        4 => criterion_4(),
        5 => criterion_5(opts),
        6 => criterion_6(opts),
        7 => criterion_7(opts),
        8 => criterion_8(opts),
        9 => criterion_9(),
        _ => Rows::default(),
    };
    CriterionResult {
        number,
        title: title(number),
        rows: rows.0,
        elapsed: start.elapsed(),
        time_limit: time_limit(number),
    }
}

pub fn run_suite(opts: &SuiteOptions) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&n| run_criterion(n, opts)).collect()
}

fn criterion_1() -> Rows {
    let mut rows = Rows::default();
    for p in 2..=4u64 {
        for q in 2..=4u64 {
            for plus in [false, true] {
                let name = format!("|Aut(gamma({p},{q}{}))|", if plus { ",+" } else { "" });
                match Graph::gamma(p, q, plus).and_then(|g| graph_automorphisms(&g)) {
                    Ok(group) => rows.check(name, factorial(p), group.order()),
                    Err(e) => rows.error(name, e),
                }
            }
        }
    }
    rows
}

fn criterion_2(opts: &SuiteOptions) -> Rows {
    let mut rows = Rows::default();
    let mut cases = Vec::new();
    for (i, g) in random_graphs(opts.seed, 50, 8).iter().enumerate() {
        let (v, e) = g.counts();
        let mut r = Rows::default();
        r.check(
            format!("random#{i} |M|"),
            v + e + 2,
            monoid_from_graph(g).size(),
        );
        r.check(
            format!("random#{i} |E|"),
            1 + v + 2 * e,
            PartialGroup::from_graph(g).size(),
        );
        r.check(format!("random#{i} |P|"), v + e, face_poset(g).size());
        r.check(
            format!("random#{i} dim A"),
            v + e,
            evolution_algebra(g).dim(),
        );
        cases.extend(r.0);
    }
    rows.summarize("size formulas on 50 random graphs", cases);
    rows
}

/// Checks that `phi` maps `Aut(graph)` injectively into `group` and is
/// multiplicative on every pair.
fn extension_is_isomorphism(
    auts: &PermSet,
    group: &PermSet,
    phi: impl Fn(&Permutation) -> Result<Permutation> + Sync,
) -> std::result::Result<(), String> {
    let list: Vec<&Permutation> = auts.iter().collect();
    let images: Vec<Permutation> = list
        .iter()
        .map(|s| phi(s))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    if let Some(bad) = images.iter().find(|x| !group.contains(x)) {
        return Err(format!("image {bad} is not an automorphism"));
    }
    if images.iter().collect::<HashSet<_>>().len() != images.len() {
        return Err("extension is not injective".into());
    }
    if group.order() != images.len() {
        return Err(format!(
            "{} images in a group of order {}",
            images.len(),
            group.order()
        ));
    }
    let failure = (0..list.len()).into_par_iter().find_map_any(|i| {
        (0..list.len()).find_map(|j| {
            let composite = list[i].compose(list[j]).ok()?;
            let lhs = phi(&composite).ok()?;
            let rhs = images[i].compose(&images[j]).ok()?;
            (lhs != rhs).then(|| format!("Φ({}∘{}) differs", list[i], list[j]))
        })
    });
    failure.map_or(Ok(()), Err)
}

fn criterion_3(opts: &SuiteOptions) -> Rows {
    let mut rows = Rows::default();
    let random = if opts.quick { 20 } else { 100 };
    let corpus = standard_corpus(opts.seed, random);
    let cases: Vec<ClaimRow> = corpus
        .par_iter()
        .flat_map_iter(|(name, g)| {
            let mut r = Rows::default();
            let auts = match graph_automorphisms(g) {
                Ok(a) => a,
                Err(e) => {
                    r.error(format!("{name} Aut(graph)"), e);
                    return r.0;
                }
            };
            let order = auts.order();
            let gm = monoid_from_graph(g);
            match monoid_automorphisms(&gm) {
                Ok(group) => {
                    r.check(format!("{name} |Aut M|"), order, group.order());
                    let iso = extension_is_isomorphism(&auts, &group, |s| monoid_extension(g, s));
                    r.assert(
                        format!("{name} Φ monoid isomorphism"),
                        iso.is_ok(),
                        iso.err().unwrap_or_default(),
                    );
                }
                Err(e) => r.error(format!("{name} |Aut M|"), e),
            }
            let pg = PartialGroup::from_graph(g);
            match partial_automorphisms(&pg, 3) {
                Ok(group) => {
                    r.check(format!("{name} |Aut E|"), order, group.order());
                    let iso =
                        extension_is_isomorphism(&auts, &group, |s| partial_group_extension(g, s));
                    r.assert(
                        format!("{name} Φ partial-group isomorphism"),
                        iso.is_ok(),
                        iso.err().unwrap_or_default(),
                    );
                }
                Err(e) => r.error(format!("{name} |Aut E|"), e),
            }
            let p = face_poset(g);
            match poset_automorphisms(&p) {
                Ok(group) => {
                    r.check(format!("{name} |Aut P|"), order, group.order());
                    let iso = extension_is_isomorphism(&auts, &group, |s| poset_extension(g, s));
                    r.assert(
                        format!("{name} Φ poset isomorphism"),
                        iso.is_ok(),
                        iso.err().unwrap_or_default(),
                    );
                }
                Err(e) => r.error(format!("{name} |Aut P|"), e),
            }
            r.0
        })
        .collect();
    rows.summarize(&format!("{} corpus graphs", corpus.len()), cases);
    rows
}

fn criterion_4() -> Rows {
    let mut rows = Rows::default();
    let monoid_graphs: Vec<Graph> = (0..=7).flat_map(|n| all_graphs(n, 7 - n)).collect();
    let cases: Vec<ClaimRow> = monoid_graphs
        .par_iter()
        .map(|g| {
            let gm = monoid_from_graph(g);
            let mut r = Rows::default();
            let name = format!("M({:?})", g.counts());
            match (
                monoid_automorphisms(&gm),
                monoid_automorphisms_bruteforce(gm.base()),
            ) {
                (Ok(a), Ok(b)) => r.assert(name, a == b, format!("{} vs {}", a.order(), b.order())),
                (Err(e), _) | (_, Err(e)) => r.error(name, e),
            }
            r.0.remove(0)
        })
        .collect();
    rows.summarize(
        &format!(
            "monoids with at most 9 elements ({} graphs)",
            monoid_graphs.len()
        ),
        cases,
    );

    let pg_graphs: Vec<Graph> = (0..=7)
        .flat_map(|n: usize| all_graphs(n, 7usize.saturating_sub(n) / 2))
        .collect();
    let cases: Vec<ClaimRow> = pg_graphs
        .par_iter()
        .map(|g| {
            let pg = PartialGroup::from_graph(g);
            let mut r = Rows::default();
            let name = format!("E({:?})", g.counts());
            match (
                partial_automorphisms(&pg, 3),
                partial_automorphisms_bruteforce(&pg, 3),
            ) {
                (Ok(a), Ok(b)) => r.assert(name, a == b, format!("{} vs {}", a.order(), b.order())),
                (Err(e), _) | (_, Err(e)) => r.error(name, e),
            }
            r.0.remove(0)
        })
        .collect();
    rows.summarize(
        &format!(
            "partial groups with at most 8 elements ({} graphs)",
            pg_graphs.len()
        ),
        cases,
    );

    let poset_graphs: Vec<Graph> = (0..=8).flat_map(|n| all_graphs(n, 8 - n)).collect();
    let cases: Vec<ClaimRow> = poset_graphs
        .par_iter()
        .map(|g| {
            let p = face_poset(g);
            let mut r = Rows::default();
            let name = format!("P({:?})", g.counts());
            match (poset_automorphisms(&p), poset_automorphisms_bruteforce(&p)) {
                (Ok(a), Ok(b)) => r.assert(name, a == b, format!("{} vs {}", a.order(), b.order())),
                (Err(e), _) | (_, Err(e)) => r.error(name, e),
            }
            r.0.remove(0)
        })
        .collect();
    rows.summarize(
        &format!(
            "posets with at most 8 elements ({} graphs)",
            poset_graphs.len()
        ),
        cases,
    );
    rows
}

/// `𝓔(Γ)` with `(x)(x)(x)` multiplied to the unit instead of `(x)`, where
/// `x` is the first vertex.
pub struct CorruptedProduct(pub PartialGroup);

impl PartialGroupOps for CorruptedProduct {
    fn size(&self) -> usize {
        self.0.size()
    }
    fn unit(&self) -> usize {
        self.0.unit()
    }
    fn domain_contains(&self, word: &[usize]) -> bool {
        self.0.domain_contains(word)
    }
    fn multiply(&self, word: &[usize]) -> Option<usize> {
        let x = self.0.vertex_element(0);
        if word == [x, x, x] {
            return Some(self.0.unit());
        }
        self.0.multiply(word)
    }
    fn inverse(&self, element: usize) -> usize {
        self.0.inverse(element)
    }
    fn element_label(&self, element: usize) -> String {
        self.0.element_label(element)
    }
}

/// `𝓔(Γ)` with `(x)(x)` removed from the domain, where `x` is the first
/// vertex.
pub struct CorruptedDomain(pub PartialGroup);

impl PartialGroupOps for CorruptedDomain {
    fn size(&self) -> usize {
        self.0.size()
    }
    fn unit(&self) -> usize {
        self.0.unit()
    }
    fn domain_contains(&self, word: &[usize]) -> bool {
        let x = self.0.vertex_element(0);
        word != [x, x] && self.0.domain_contains(word)
    }
    fn multiply(&self, word: &[usize]) -> Option<usize> {
        if self.domain_contains(word) {
            self.0.multiply(word)
        } else {
            None
        }
    }
    fn inverse(&self, element: usize) -> usize {
        self.0.inverse(element)
    }
    fn element_label(&self, element: usize) -> String {
        self.0.element_label(element)
    }
}

fn criterion_5(opts: &SuiteOptions) -> Rows {
    let mut rows = Rows::default();
    let random = if opts.quick { 20 } else { 100 };
    let corpus = standard_corpus(opts.seed, random);
    let cases: Vec<ClaimRow> = corpus
        .iter()
        .map(|(name, g)| {
            let mut r = Rows::default();
            match check_partial_group_axioms(&PartialGroup::from_graph(g), 4) {
                Ok(report) => r.assert(
                    format!("{name} axioms at length 4"),
                    report.all_passed(),
                    report,
                ),
                Err(e) => r.error(format!("{name} axioms at length 4"), e),
            }
            r.0.remove(0)
        })
        .collect();
    rows.summarize(&format!("{} corpus graphs", corpus.len()), cases);

    let base = PartialGroup::from_graph(&Graph::gamma(2, 2, false).expect("valid"));
    for (name, report) in [
        (
            "corrupted product",
            check_partial_group_axioms(&CorruptedProduct(base.clone()), 4),
        ),
        (
            "corrupted domain",
            check_partial_group_axioms(&CorruptedDomain(base.clone()), 4),
        ),
    ] {
        match report {
            Ok(report) => {
                let failures: Vec<String> = report
                    .failures()
                    .map(|c| format!("{} ({})", c.name, c.witness.clone().unwrap_or_default()))
                    .collect();
                let witnessed = report.failures().any(|c| c.witness.is_some());
                rows.0.push(ClaimRow {
                    claim: format!("{name} fails an axiom with a witness"),
                    expected: "at least one failure".into(),
                    computed: if failures.is_empty() {
                        "none".into()
                    } else {
                        failures.join("; ")
                    },
                    passed: witnessed,
                });
            }
            Err(e) => rows.error(name, e),
        }
    }
    rows
}

fn criterion_6(opts: &SuiteOptions) -> Rows {
    let mut rows = Rows::default();
    let random = if opts.quick { 20 } else { 100 };
    let samples = if opts.quick { 20 } else { 100 };
    let corpus = standard_corpus(opts.seed, random);
    let cases: Vec<ClaimRow> = corpus
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, (name, g))| {
            let mut r = Rows::default();
            let a = evolution_algebra(g);
            r.assert(
                format!("{name} A(g) regular"),
                a.is_regular(),
                "rank deficit",
            );
            let auts = match graph_automorphisms(g) {
                Ok(x) => x,
                Err(e) => {
                    r.error(format!("{name} Aut(graph)"), e);
                    return r.0;
                }
            };
            let mut induced = HashSet::new();
            let mut matrices = Vec::new();
            for s in &auts {
                let perm = match induced_basis_permutation(g, s) {
                    Ok(p) => p,
                    Err(e) => {
                        r.error(format!("{name} induced map of {s}"), e);
                        continue;
                    }
                };
                let m: Matrix = Matrix::permutation(&perm);
                let ok = a.is_algebra_automorphism(&m).unwrap_or(false);
                r.assert(
                    format!("{name} induced map of {s} is an automorphism"),
                    ok,
                    "product check failed",
                );
                induced.insert(perm);
                matrices.push(m);
            }
            r.check(format!("{name} Φ injective"), auts.order(), induced.len());

            // Homomorphism on pairs: all pairs for small groups, a sample otherwise.
            let list: Vec<&Permutation> = auts.iter().collect();
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ i as u64);
            let pairs: Vec<(usize, usize)> = if list.len() <= 120 {
                (0..list.len())
                    .flat_map(|x| (0..list.len()).map(move |y| (x, y)))
                    .collect()
            } else {
                (0..5000)
                    .map(|_| {
                        use rand::Rng;
                        (rng.gen_range(0..list.len()), rng.gen_range(0..list.len()))
                    })
                    .collect()
            };
            let hom = pairs.iter().all(|&(x, y)| {
                let composite = list[x].compose(list[y]).expect("same degree");
                let lhs: Matrix = induced_algebra_map(g, &composite).expect("automorphism");
                matrices[x]
                    .compose(&matrices[y])
                    .is_ok_and(|rhs| rhs == lhs)
            });
            r.assert(
                format!("{name} Φ(στ) = Φ(σ)Φ(τ)"),
                hom,
                "matrix products differ",
            );

            let dim = a.dim();
            let non_induced = (0..).map(|_| {
                let mut images: Vec<usize> = (0..dim).collect();
                images.shuffle(&mut rng);
                Permutation::new(images).expect("shuffle is a bijection")
            });
            let rejected = if induced.len() == factorial_usize(dim) {
                None
            } else {
                let mut count = 0;
                let mut bad = None;
                for perm in non_induced.filter(|p| !induced.contains(p)).take(samples) {
                    if a.is_algebra_automorphism(&Matrix::permutation(&perm))
                        .unwrap_or(true)
                    {
                        bad = Some(perm.to_string());
                    }
                    count += 1;
                }
                Some((count, bad))
            };
            match rejected {
                None => r.assert(
                    format!("{name} no non-induced permutations exist"),
                    true,
                    "",
                ),
                Some((count, bad)) => {
                    r.check(
                        format!("{name} random non-induced permutations tried"),
                        samples,
                        count,
                    );
                    r.assert(
                        format!("{name} random non-induced permutations rejected"),
                        bad.is_none(),
                        bad.unwrap_or_default(),
                    );
                }
            }
            r.0
        })
        .collect();
    rows.summarize(&format!("{} corpus graphs", corpus.len()), cases);
    rows
}

fn factorial_usize(n: usize) -> usize {
    (1..=n)
        .try_fold(1usize, |acc, k| acc.checked_mul(k))
        .unwrap_or(usize::MAX)
}

fn criterion_7(opts: &SuiteOptions) -> Rows {
    let mut rows = Rows::default();
    let r = |s: &str| crate::realize::parse_ratio(s).expect("valid ratio");
    let cases: [(&str, Target, u64, u64, u64, u64, bool); 6] = [
        ("1", Target::GraphV, 3, 2, 6, 6, true),
        ("3/4", Target::GraphV, 3, 4, 8, 6, true),
        ("3/2", Target::Poset, 6, 233, 480, 720, true),
        ("3/2", Target::Monoid, 6, 232, 480, 720, true),
        ("1", Target::PartialGroup, 6, 233, 720, 720, true),
        ("3/2", Target::EvoAlg, 6, 233, 480, 720, true),
    ];
    for (ratio, target, p, q, size, aut, level3) in cases {
        let label = format!("r={ratio} {target}");
        let plan = match plan(&r(ratio), target) {
            Ok(plan) => plan,
            Err(e) => {
                rows.error(label, e);
                continue;
            }
        };
        rows.check(
            format!("{label} (p, q)"),
            format!("({p}, {q})"),
            format!("({}, {})", plan.p, plan.q),
        );
        rows.check(
            format!("{label} predicted size"),
            size,
            &plan.predicted_size,
        );
        rows.check(
            format!("{label} predicted |Aut|"),
            aut,
            &plan.predicted_aut_order,
        );
        let built = match materialize(&plan, DEFAULT_VERTEX_BUDGET) {
            Ok(b) => b,
            Err(e) => {
                rows.error(format!("{label} materialize"), e);
                continue;
            }
        };
        let level = if level3 && !opts.quick { 3 } else { 2 };
        let report = verify(&plan, &built, level);
        let achieved = report
            .achieved
            .clone()
            .map_or("none".to_string(), |a| a.to_string());
        rows.check(
            format!("{label} achieved ratio (level {level})"),
            &plan.r,
            achieved,
        );
        rows.assert(
            format!("{label} verification (level {level})"),
            report.passed(),
            &report,
        );
    }
    rows
}

fn criterion_8(opts: &SuiteOptions) -> Rows {
    use rand::Rng;
    let mut rows = Rows::default();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let ratios: Vec<Rational> = (0..1000)
        .map(|_| {
            Rational::new(
                rng.gen_range(1..=50i64).into(),
                rng.gen_range(1..=50i64).into(),
            )
        })
        .collect();
    let two = BigUint::from(2u32);
    for target in Target::ALL {
        let failures: Vec<String> = ratios
            .par_iter()
            .filter_map(|x| match plan(x, target) {
                Ok(p) if p.predicted_ratio() == *x && p.p >= two && p.q >= two => None,
                Ok(p) => Some(format!(
                    "{x}: predicted {} with p={} q={}",
                    p.predicted_ratio(),
                    p.p,
                    p.q
                )),
                Err(e) => Some(format!("{x}: {e}")),
            })
            .collect();
        rows.check(
            format!("{target}: plans with exact ratio and p, q >= 2"),
            1000,
            1000 - failures.len(),
        );
        if let Some(first) = failures.first() {
            rows.check(format!("{target}: first failure"), "none", first);
        }
        let halves = plan(&Rational::new(2.into(), 4.into()), target).ok();
        rows.assert(
            format!("{target}: plan(2/4) = plan(1/2)"),
            halves.is_some() && halves == plan(&Rational::new(1.into(), 2.into()), target).ok(),
            "plans differ",
        );
    }
    let scaled = plan_with_scale(
        &Rational::new(1.into(), 1.into()),
        Target::GraphV,
        &BigUint::from(5u32),
    );
    rows.assert(
        "explicit scale override keeps the ratio",
        scaled
            .as_ref()
            .is_ok_and(|p| p.predicted_ratio() == Rational::new(1.into(), 1.into())),
        "override failed",
    );
    rows
}

fn criterion_9() -> Rows {
    let mut rows = Rows::default();
    let edge = Graph::new(["x", "y"], [("x", "y")]).expect("valid");
    let pg = PartialGroup::from_graph(&edge);
    let (x, y) = (0, 1);
    let word: Vec<usize> = [(x, 3), (y, 5), (x, 2), (y, 6), (x, 1)]
        .iter()
        .flat_map(|&(v, k)| std::iter::repeat(v).take(k))
        .collect();
    let elements: Vec<usize> = word.iter().map(|&v| pg.vertex_element(v)).collect();
    rows.check(
        "x^3 y^5 x^2 y^6 x in the domain",
        false,
        pg.in_domain(&elements).unwrap_or(true),
    );
    rows.check("length of its full reduction", 3, reduce_word(&word).len());

    let plain = Graph::gamma(6, 232, false).expect("valid");
    let plus = Graph::gamma(6, 232, true).expect("valid");
    let (m_plain, m_plus) = (
        monoid_from_graph(&plain).size(),
        monoid_from_graph(&plus).size(),
    );
    rows.check("|M(gamma(6,232))| = 2(p+q)+3", 2 * (6 + 232) + 3, m_plain);
    rows.check("|M(gamma(6,232)+)| = 2(p+q)+4", 2 * (6 + 232) + 4, m_plus);
    rows.assert("the two sizes differ", m_plain != m_plus, "equal sizes");
    rows.check(
        "|Aut(gamma(6,232))| / |M(gamma(6,232)+)|",
        "3/2",
        Rational::new(graph_automorphism_count(&plus).into(), m_plus.into()),
    );

    let report = check_graph_monoid(&monoid_from_graph(
        &Graph::gamma(2, 2, false).expect("valid"),
    ));
    let assoc = report.get("associativity").and_then(|c| c.witness.clone());
    rows.check(
        "associativity of M(gamma(2,2)) as displayed fails at",
        "(c0, c1, {c0,c1})",
        assoc.unwrap_or_else(|| "no failure".into()),
    );
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria() {
        let opts = SuiteOptions {
            quick: true,
            ..SuiteOptions::default()
        };
        for n in [1, 8, 9] {
            let result = run_criterion(n, &opts);
            assert!(result.passed(), "{result}\n{:#?}", result.rows);
        }
    }
}
