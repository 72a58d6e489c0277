//! Realizing a positive rational `r` as `|Aut(X)| / size(X)`.
//!
//! Every target uses a graph `Γ_{p,q}` or `Γ⁺_{p,q}`, whose automorphism
//! group is the symmetric group on the `p` leaves. Writing `r = m/n` with `m`
//! and `n` large enough for the target, `q` is chosen so that the size of the
//! structure is `p!·n/m`:
//!
//! | target          | bounds        | `p`  | `q`                       | size         |
//! |-----------------|---------------|------|---------------------------|--------------|
//! | `graph-v`       | `m, n ≥ 3`    | `m`  | `n(m−1)! − m − 1`         | `p + q + 1`  |
//! | `graph-ve`      | `m ≥ 3, n ≥ 2`| `2m` | `n(2m−1)! − 2m − 1`       | `2(p + q + 1)` |
//! | `monoid`        | `m ≥ 3, n ≥ 2`| `2m` | `n(2m−1)! − 2m − 2`       | `2(p + q) + 4` |
//! | `partial-group` | `m, n ≥ 2`    | `3m` | `n(3m−1)! − 3m − 1`       | `3(p + q + 1)` |
//! | `poset`         | `m ≥ 3, n ≥ 2`| `2m` | `n(2m−1)! − 2m − 1`       | `2(p + q + 1)` |
//! | `evoalg`        | `m ≥ 3, n ≥ 2`| `2m` | `n(2m−1)! − 2m − 1`       | `2(p + q + 1)` |
//!
//! All targets except `graph-v` use `Γ⁺`. Plans are exact and symbolic; `q`
//! may be far too large to build, which [`materialize`] refuses against a
//! vertex budget.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::aut::{graph_automorphism_count, graph_automorphisms};
use crate::error::{Error, Result};
use crate::evolution::{evolution_algebra, induced_algebra_map, EvolutionAlgebra, Matrix};
use crate::field::Rational;
use crate::graph::Graph;
use crate::monoid::{monoid_automorphisms, monoid_from_graph, GraphMonoid};
use crate::partial_group::{partial_automorphisms, PartialGroup, PartialGroupOps};
use crate::perm::factorial;
use crate::poset::{face_poset, poset_automorphisms, FacePoset};

/// Default vertex budget for [`materialize`].
pub const DEFAULT_VERTEX_BUDGET: u64 = 5000;
/// Largest evolution algebra whose induced automorphisms level 3 certifies.
pub const EVOALG_LEVEL3_DIM: usize = 1024;
/// Word length used by level 3 on partial groups.
pub const PARTIAL_GROUP_LEVEL3_LEN: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Graphs, sized by vertex count.
    GraphV,
    /// Graphs, sized by vertices plus edges.
    GraphVe,
    Monoid,
    PartialGroup,
    Poset,
    EvoAlg,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::GraphV,
        Target::GraphVe,
        Target::Monoid,
        Target::PartialGroup,
        Target::Poset,
        Target::EvoAlg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::GraphV => "graph-v",
            Target::GraphVe => "graph-ve",
            Target::Monoid => "monoid",
            Target::PartialGroup => "partial-group",
            Target::Poset => "poset",
            Target::EvoAlg => "evoalg",
        }
    }

    /// Lower bounds on `(m, n)`.
    pub fn bounds(self) -> (u32, u32) {
        match self {
            Target::GraphV => (3, 3),
            Target::PartialGroup => (2, 2),
            _ => (3, 2),
        }
    }

    /// `p = factor · m`.
    fn factor(self) -> u32 {
        match self {
            Target::GraphV => 1,
            Target::PartialGroup => 3,
            _ => 2,
        }
    }

    pub fn uses_plus(self) -> bool {
        self != Target::GraphV
    }

    fn size(self, p: &BigUint, q: &BigUint) -> BigUint {
        let s = p + q;
        match self {
            Target::GraphV => s + 1u32,
            Target::Monoid => s * 2u32 + 4u32,
            Target::PartialGroup => (s + 1u32) * 3u32,
            _ => (s + 1u32) * 2u32,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown target `{s}`"))
    }
}

/// Parses `M/N` or an integer as a positive rational.
pub fn parse_ratio(text: &str) -> Result<Rational> {
    let r: Rational = text
        .trim()
        .parse()
        .map_err(|_| Error::NonPositiveRatio(text.to_string()))?;
    if r <= Rational::zero() {
        return Err(Error::NonPositiveRatio(text.to_string()));
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationPlan {
    pub target: Target,
    pub r: Rational,
    pub m: BigUint,
    pub n: BigUint,
    pub scale: BigUint,
    pub p: BigUint,
    pub q: BigUint,
    pub uses_plus: bool,
    pub predicted_size: BigUint,
    pub predicted_aut_order: BigUint,
}

impl RealizationPlan {
    pub fn predicted_ratio(&self) -> Rational {
        ratio(&self.predicted_aut_order, &self.predicted_size)
    }

    /// Number of vertices of the graph to build.
    pub fn vertex_count(&self) -> BigUint {
        &self.p + &self.q + 1u32 + u32::from(self.uses_plus)
    }
}

impl fmt::Display for RealizationPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "target: {}", self.target)?;
        writeln!(f, "r: {}", self.r)?;
        writeln!(f, "scale: {}", self.scale)?;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "p: {}", self.p)?;
        writeln!(f, "q: {}", self.q)?;
        writeln!(
            f,
            "graph: gamma({}, {}){}",
            self.p,
            self.q,
            if self.uses_plus { "+" } else { "" }
        )?;
        writeln!(f, "predicted size: {}", self.predicted_size)?;
        writeln!(f, "predicted |Aut|: {}", self.predicted_aut_order)?;
        writeln!(f, "predicted ratio: {}", self.predicted_ratio())
    }
}

fn ratio(a: &BigUint, b: &BigUint) -> Rational {
    Rational::new(BigInt::from(a.clone()), BigInt::from(b.clone()))
}

fn reduced(r: &Rational) -> Result<(BigUint, BigUint)> {
    let to_unsigned = |x: &BigInt| {
        x.to_biguint()
            .ok_or_else(|| Error::NonPositiveRatio(r.to_string()))
    };
    if *r <= Rational::zero() {
        return Err(Error::NonPositiveRatio(r.to_string()));
    }
    Ok((to_unsigned(r.numer())?, to_unsigned(r.denom())?))
}

/// The plan with the smallest scale meeting the target's bounds.
pub fn plan(r: &Rational, target: Target) -> Result<RealizationPlan> {
    let (a, b) = reduced(r)?;
    let (min_m, min_n) = target.bounds();
    let need = |x: &BigUint, bound: u32| -> BigUint {
        let bound = BigUint::from(bound);
        if *x >= bound {
            BigUint::one()
        } else {
            bound.div_ceil(x)
        }
    };
    let k = need(&a, min_m).max(need(&b, min_n));
    plan_with_scale(r, target, &k)
}

/// The plan for `m = k·a`, `n = k·b` where `a/b` is `r` in lowest terms.
pub fn plan_with_scale(r: &Rational, target: Target, k: &BigUint) -> Result<RealizationPlan> {
    let (a, b) = reduced(r)?;
    let (m, n) = (k * &a, k * &b);
    let (min_m, min_n) = target.bounds();
    if k.is_zero() || m < BigUint::from(min_m) || n < BigUint::from(min_n) {
        return Err(Error::ScaleTooSmall {
            scale: k.to_string(),
            m: m.to_string(),
            n: n.to_string(),
            min_m,
            min_n,
        });
    }
    let factor = target.factor();
    let p_small = (&m * factor)
        .to_u64()
        .ok_or(Error::GammaParameters { p: u64::MAX, q: 0 })?;
    let p = BigUint::from(p_small);
    let offset = &p + 1u32 + u32::from(target == Target::Monoid);
    let q = &n * factorial(p_small - 1) - offset;
    if p < BigUint::from(2u32) || q < BigUint::from(2u32) {
        return Err(Error::GammaParameters {
            p: p_small,
            q: q.to_u64().unwrap_or(u64::MAX),
        });
    }
    let predicted_size = target.size(&p, &q);
    Ok(RealizationPlan {
        target,
        r: r.clone(),
        m,
        n,
        scale: k.clone(),
        uses_plus: target.uses_plus(),
        predicted_aut_order: factorial(p_small),
        predicted_size,
        p,
        q,
    })
}

/// The structure a plan asks for.
#[derive(Clone, Debug)]
pub enum Structure {
    /// The graph itself, for the two graph targets.
    Graph,
    Monoid(GraphMonoid),
    PartialGroup(PartialGroup),
    Poset(FacePoset),
    EvoAlg(EvolutionAlgebra),
}

#[derive(Clone, Debug)]
pub struct Materialized {
    pub target: Target,
    pub graph: Graph,
    pub structure: Structure,
}

impl Materialized {
    /// The size notion of the target.
    pub fn size(&self) -> usize {
        let (v, e) = self.graph.counts();
        match (&self.structure, self.target) {
            (Structure::Graph, Target::GraphV) => v,
            (Structure::Graph, _) => v + e,
            (Structure::Monoid(m), _) => m.size(),
            (Structure::PartialGroup(pg), _) => pg.size(),
            (Structure::Poset(p), _) => p.size(),
            (Structure::EvoAlg(a), _) => a.dim(),
        }
    }

    /// Serialized structure and a file extension for it.
    pub fn render(&self) -> (String, &'static str) {
        match &self.structure {
            Structure::Graph => (self.graph.to_json(), "json"),
            Structure::Monoid(m) => (m.to_text(), "monoid"),
            Structure::PartialGroup(pg) => (pg.to_text(), "pgroup"),
            Structure::Poset(p) => (p.to_text(), "poset"),
            Structure::EvoAlg(a) => (a.to_text(), "evoalg"),
        }
    }
}

/// Builds the graph of a plan and applies the target's construction,
/// provided `p + q + 2` is within `vertex_budget`.
pub fn materialize(plan: &RealizationPlan, vertex_budget: u64) -> Result<Materialized> {
    let needed = &plan.p + &plan.q + 2u32;
    if needed > BigUint::from(vertex_budget) {
        return Err(Error::BudgetExceeded {
            what: "materialization vertices",
            size: needed.to_usize().unwrap_or(usize::MAX),
            limit: vertex_budget.to_usize().unwrap_or(usize::MAX),
        });
    }
    let (p, q) = (
        plan.p.to_u64().expect("within budget"),
        plan.q.to_u64().expect("within budget"),
    );
    let graph = Graph::gamma(p, q, plan.uses_plus)?;
    let structure = match plan.target {
        Target::GraphV | Target::GraphVe => Structure::Graph,
        Target::Monoid => Structure::Monoid(monoid_from_graph(&graph)),
        Target::PartialGroup => Structure::PartialGroup(PartialGroup::from_graph(&graph)),
        Target::Poset => Structure::Poset(face_poset(&graph)),
        Target::EvoAlg => Structure::EvoAlg(evolution_algebra(&graph)),
    };
    Ok(Materialized {
        target: plan.target,
        graph,
        structure,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyLine {
    pub level: u8,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub lines: Vec<VerifyLine>,
    pub r: Rational,
    /// Automorphism count over actual size, when a count was obtained.
    pub achieved: Option<Rational>,
    pub aut_order: Option<BigUint>,
    pub size: BigUint,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
            && self.achieved.as_ref().map_or(true, |a| *a == self.r)
    }

    fn push(
        &mut self,
        level: u8,
        name: &str,
        expected: impl ToString,
        computed: impl ToString,
        status: Status,
    ) {
        self.lines.push(VerifyLine {
            level,
            name: name.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status,
        });
    }

    fn compare(&mut self, level: u8, name: &str, expected: &BigUint, computed: &BigUint) {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(level, name, expected, computed, status);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(
                f,
                "[{}] level {} {}: expected {}, computed {}",
                l.status, l.level, l.name, l.expected, l.computed
            )?;
        }
        match (&self.achieved, &self.aut_order) {
            (Some(a), Some(c)) => {
                let rel = if *a == self.r { "=" } else { "!=" };
                writeln!(
                    f,
                    "achieved ratio {c}/{} = {a} {rel} r = {}",
                    self.size, self.r
                )?
            }
            _ => writeln!(
                f,
                "achieved ratio not computed at this level, r = {}",
                self.r
            )?,
        }
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Checks a materialized plan at `level` 1 (size), 2 (graph automorphism
/// count) or 3 (automorphisms of the structure itself).
pub fn verify(plan: &RealizationPlan, built: &Materialized, level: u8) -> VerificationReport {
    let size = BigUint::from(built.size());
    let mut report = VerificationReport {
        lines: Vec::new(),
        r: plan.r.clone(),
        achieved: None,
        aut_order: None,
        size: size.clone(),
    };
    report.compare(1, "size", &plan.predicted_size, &size);
    if let Structure::EvoAlg(a) = &built.structure {
        let regular = a.is_regular();
        report.push(
            1,
            "regular",
            true,
            regular,
            if regular { Status::Pass } else { Status::Fail },
        );
    }
    let mut count = None;
    if level >= 2 {
        let c = graph_automorphism_count(&built.graph);
        report.compare(2, "graph |Aut|", &plan.predicted_aut_order, &c);
        count = Some(c);
    }
    if level >= 3 {
        match structure_automorphism_count(built) {
            Ok(Some(c)) => {
                report.compare(3, "structure |Aut|", &plan.predicted_aut_order, &c);
                count = Some(c);
            }
            Ok(None) => report.push(
                3,
                "structure |Aut|",
                &plan.predicted_aut_order,
                "not enumerated",
                Status::Skipped,
            ),
            Err(e) => report.push(
                3,
                "structure |Aut|",
                &plan.predicted_aut_order,
                e,
                Status::Skipped,
            ),
        }
    }
    report.achieved = count.as_ref().map(|c| ratio(c, &size));
    report.aut_order = count;
    report
}

fn structure_automorphism_count(built: &Materialized) -> Result<Option<BigUint>> {
    let order = match &built.structure {
        Structure::Graph => graph_automorphisms(&built.graph)?.order(),
        Structure::Monoid(m) => monoid_automorphisms(m)?.order(),
        Structure::PartialGroup(pg) => partial_automorphisms(pg, PARTIAL_GROUP_LEVEL3_LEN)?.order(),
        Structure::Poset(p) => poset_automorphisms(p)?.order(),
        Structure::EvoAlg(a) => {
            // Only the induced automorphisms can be certified; the count is
            // the number of graph automorphisms whose matrices pass.
            if a.dim() > EVOALG_LEVEL3_DIM {
                return Ok(None);
            }
            let group = graph_automorphisms(&built.graph)?;
            let mut passed = 0usize;
            for sigma in &group {
                let m: Matrix = induced_algebra_map(&built.graph, sigma)?;
                if a.is_algebra_automorphism(&m)? {
                    passed += 1;
                }
            }
            passed
        }
    };
    Ok(Some(BigUint::from(order)))
}
