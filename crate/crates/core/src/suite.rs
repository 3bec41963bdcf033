//! Named verification suites with reproducible case reports.
//!
//! Each suite returns one record per case. Randomized suites draw from a ChaCha stream seeded
//! by the caller, so the suite name, its parameters and the seed determine the report exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::heis::{is_direct_sum, mail_summands, relations as heis_relations, BiproductWitness, End, HeisMorphism, HeisObject};
use crate::heis::{NormalHeisDiagram, Orientation};
use crate::par::{relations as par_relations, verify_presentation, Generator, ParMorphism, PartitionDiagram, Vertex};
use crate::poly::TPolynomial;
use crate::psi::{check_faithful, psi, psi_diagram, t_of_perm};
use crate::rep::{bee_rank, check_actcom, equivariant_dim, ChainSpace, PermTensorSpace};
use crate::symfunc::{
    cycle_type, heis_double_mul, independent, kdelta_embed, kdelta_multiplicative, kronecker_coproduct, mn_character, stirling,
    stirling_normal_order_check, LeadingClassCheck, Partition, RHeisElem, SymFuncElem,
};

/// Largest oracle dimension a suite accepts without `force`.
pub const SIZE_GUARD: usize = 100_000;

/// Random morphisms drawn by the action-compatibility suite.
pub const RANDOM_CASES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Presentation,
    HeisRelations,
    Functor,
    Actcom,
    Bee,
    Faithful,
    Biproduct,
    K0Stirling,
    Filtration,
    Kronecker,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::Presentation,
        SuiteName::HeisRelations,
        SuiteName::Functor,
        SuiteName::Actcom,
        SuiteName::Bee,
        SuiteName::Faithful,
        SuiteName::Biproduct,
        SuiteName::K0Stirling,
        SuiteName::Filtration,
        SuiteName::Kronecker,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Presentation => "presentation",
            SuiteName::HeisRelations => "heis-relations",
            SuiteName::Functor => "functor",
            SuiteName::Actcom => "actcom",
            SuiteName::Bee => "bee",
            SuiteName::Faithful => "faithful",
            SuiteName::Biproduct => "biproduct",
            SuiteName::K0Stirling => "k0-stirling",
            SuiteName::Filtration => "filtration",
            SuiteName::Kronecker => "kronecker",
        }
    }

    /// Default `n` range, if the suite uses one.
    pub fn default_n(self) -> Option<RangeInclusive<usize>> {
        match self {
            SuiteName::Actcom => Some(2..=5),
            SuiteName::Bee => Some(1..=4),
            _ => None,
        }
    }

    /// Default size bound, if the suite uses one.
    pub fn default_max_size(self) -> Option<usize> {
        match self {
            SuiteName::Actcom | SuiteName::Bee => Some(4),
            SuiteName::Faithful | SuiteName::Kronecker => Some(5),
            SuiteName::K0Stirling => Some(8),
            SuiteName::Filtration => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}; expected one of {}", SuiteName::ALL.iter().join(", "))))
    }
}

/// Parameters of a suite run; `None` selects the suite default.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub n: Option<RangeInclusive<usize>>,
    pub max_size: Option<usize>,
    pub seed: u64,
    pub force: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub inputs: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Case {
    /// Passes when `got` is `Ok` and equals `expected`; an error is recorded verbatim.
    fn compare(inputs: impl Into<String>, expected: impl Into<String>, got: Result<String>) -> Self {
        let expected = expected.into();
        let got = got.unwrap_or_else(|e| format!("error: {e}"));
        Case { inputs: inputs.into(), pass: got == expected, expected, got }
    }

    fn holds(inputs: impl Into<String>, got: Result<bool>) -> Self {
        Self::compare(inputs, "holds", got.map(verdict))
    }
}

fn verdict(b: bool) -> String {
    if b { "holds" } else { "fails" }.to_string()
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub seed: u64,
    pub pass: bool,
    pub cases: Vec<Case>,
    /// Kept out of serialized reports so they stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            write!(f, "{mark} {}", c.inputs)?;
            if c.pass {
                writeln!(f)?;
            } else {
                writeln!(f, ": expected {}, got {}", c.expected, c.got)?;
            }
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        write!(
            f,
            "suite {}: {} ({passed}/{} cases, seed {}, {:.2?})",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            self.cases.len(),
            self.seed,
            self.wall_time
        )
    }
}

pub fn run_suite(name: SuiteName, params: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let n = params.n.clone().or_else(|| name.default_n()).unwrap_or(0..=0);
    let max = params.max_size.or(name.default_max_size()).unwrap_or(0);
    let dim = oracle_dimension(name, &n, max);
    if dim > SIZE_GUARD && !params.force {
        return Err(Error::UnsupportedConfiguration(format!(
            "suite {name} needs an oracle of dimension {dim} > {SIZE_GUARD}; pass --force to run it anyway"
        )));
    }
    let cases = match name {
        SuiteName::Presentation => presentation(),
        SuiteName::HeisRelations => heis_relation_cases(),
        SuiteName::Functor => functor(),
        SuiteName::Actcom => actcom(n, max, params.seed),
        SuiteName::Bee => bee(n, max),
        SuiteName::Faithful => faithful(max),
        SuiteName::Biproduct => biproduct(),
        SuiteName::K0Stirling => k0_stirling(max),
        SuiteName::Filtration => filtration(max),
        SuiteName::Kronecker => kronecker(max),
    };
    Ok(SuiteReport { suite: name, seed: params.seed, pass: cases.iter().all(|c| c.pass), cases, wall_time: start.elapsed() })
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn bell(k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..k {
        let mut next = vec![*row.last().expect("nonempty row")];
        for x in &row {
            next.push(next.last().expect("nonempty row").saturating_add(*x));
        }
        row = next;
    }
    row[0]
}

/// Largest basis any oracle of the run works in.
pub fn oracle_dimension(name: SuiteName, n: &RangeInclusive<usize>, max: usize) -> usize {
    match name {
        SuiteName::Actcom => n
            .clone()
            .map(|n| ChainSpace::new(n, &HeisObject::alternating(max)).dim().max(PermTensorSpace::new(n, max).dim()))
            .max()
            .unwrap_or(0),
        SuiteName::Bee => n.clone().map(|n| n.saturating_pow(max as u32)).max().unwrap_or(0),
        SuiteName::Faithful | SuiteName::K0Stirling => bell(max),
        SuiteName::Filtration => factorial(max).saturating_mul(factorial(max)),
        SuiteName::Kronecker => factorial(max),
        _ => 0,
    }
}

fn one_line(s: impl fmt::Display) -> String {
    s.to_string().lines().map(str::trim).join("; ")
}

fn same(a: Result<HeisMorphism>, b: Result<HeisMorphism>) -> Result<bool> {
    Ok(a? == b?)
}

fn presentation() -> Vec<Case> {
    let mut cases: Vec<Case> = verify_presentation().into_iter().map(|(name, ok)| Case::holds(name, Ok(ok))).collect();
    let (upper, lower, expected) = worked_example();
    let got = ParMorphism::from_diagram(upper).compose(&ParMorphism::from_diagram(lower)).map(one_line);
    cases.push(Case::compare("worked example D ∘ D'", one_line(ParMorphism::term(TPolynomial::monomial(1, 2), expected)), got));
    cases
}

/// A `5 → 7` diagram, a `7 → 5` diagram on top of it, and their stacked diagram.
pub fn worked_example() -> (PartitionDiagram, PartitionDiagram, PartitionDiagram) {
    use Vertex::{Bottom as B, Top as T};
    let d = |b, t, blocks| PartitionDiagram::new(b, t, blocks).expect("worked example diagram");
    let lower = d(
        5,
        7,
        vec![vec![B(1), T(0), T(3)], vec![B(0), B(4)], vec![B(2), T(6)], vec![T(4), T(5)], vec![B(3)], vec![T(1)], vec![T(2)]],
    );
    let upper = d(
        7,
        5,
        vec![vec![B(0), T(0)], vec![T(1), T(3)], vec![B(1), B(3)], vec![B(6), T(2), T(4)], vec![B(2)], vec![B(4)], vec![B(5)]],
    );
    let stacked = d(5, 5, vec![vec![B(0), B(4)], vec![B(1), T(0)], vec![T(1), T(3)], vec![B(2), T(2), T(4)], vec![B(3)]]);
    (upper, lower, stacked)
}

fn heis_relation_cases() -> Vec<Case> {
    heis_relations().into_iter().map(|r| Case::holds(r.name.clone(), Ok(r.holds()))).collect()
}

/// The image of the `2 → 2` diagram with a single block.
fn square_image() -> Result<NormalHeisDiagram> {
    let alt = HeisObject::alternating(2);
    NormalHeisDiagram::new(
        alt.clone(),
        alt,
        vec![(End::B(0), End::T(0)), (End::B(1), End::B(2)), (End::B(3), End::T(3)), (End::T(1), End::T(2))],
        0,
    )
}

fn functor() -> Vec<Case> {
    let mut cases: Vec<Case> = par_relations()
        .into_iter()
        .map(|r| Case::holds(format!("image of {}", r.name), same(psi(&r.lhs), psi(&r.rhs))))
        .collect();
    for r in heis_relations().into_iter().filter(|r| r.name.contains("left curl") || r.name.contains("counterclockwise")) {
        cases.push(Case::holds(r.name.clone(), Ok(r.holds())));
    }
    let bubble = ParMorphism::generator(Generator::Eps).compose(&ParMorphism::generator(Generator::Eta));
    let expected =
        NormalHeisDiagram::new(HeisObject::unit(), HeisObject::unit(), Vec::new(), 1).map(|d| HeisMorphism::from_diagram(&d));
    cases.push(Case::holds("image of ε ∘ η is one clockwise bubble", bubble.and_then(|b| same(psi(&b), expected))));
    let xi = PartitionDiagram::new(2, 2, vec![vec![Vertex::Bottom(0), Vertex::Bottom(1), Vertex::Top(0), Vertex::Top(1)]]);
    let xi = xi.expect("single block diagram");
    cases.push(Case::holds(
        "image of the single block 2 → 2 diagram",
        same(psi_diagram(&xi), square_image().map(|d| HeisMorphism::from_diagram(&d))),
    ));
    let x_plus_y = t_of_perm(&[1, 0]).and_then(|x| x.add(&psi_diagram(&xi)?));
    cases.push(Case::holds("image of s is x + y", same(psi(&ParMorphism::generator(Generator::Swap)), x_plus_y)));
    cases
}

const GENERATORS: [Generator; 5] = [Generator::Mu, Generator::Delta, Generator::Swap, Generator::Eta, Generator::Eps];

/// A morphism `k → ℓ` with `k + ℓ ≤ max` and up to three terms with small coefficients.
fn random_morphism(rng: &mut ChaCha8Rng, max: usize) -> ParMorphism {
    let k = rng.gen_range(0..=max);
    let l = rng.gen_range(0..=max - k);
    let all = PartitionDiagram::all(k, l);
    let mut f = ParMorphism::zero(k, l);
    for _ in 0..rng.gen_range(1..=3) {
        let d = all[rng.gen_range(0..all.len())].clone();
        let c = [-2, -1, 1, 2][rng.gen_range(0..4)];
        f.add_term(d, &TPolynomial::monomial(c, rng.gen_range(0..=1)));
    }
    f
}

fn actcom(n: RangeInclusive<usize>, max: usize, seed: u64) -> Vec<Case> {
    let mut cases = Vec::new();
    let mut in_context = Vec::new();
    for g in GENERATORS {
        let (a, b) = g.arity();
        let Some(room) = max.checked_sub(a.max(b)) else { continue };
        for left in 0..=room {
            for right in 0..=room - left {
                let f = ParMorphism::identity(left).tensor(&ParMorphism::generator(g)).tensor(&ParMorphism::identity(right));
                in_context.push((format!("1_{left} ⊗ {} ⊗ 1_{right}", g.name()), f));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<(String, ParMorphism)> =
        (0..RANDOM_CASES).map(|i| (format!("random #{i}"), random_morphism(&mut rng, max))).collect();
    for n in n {
        for (label, f) in in_context.iter().chain(&random) {
            cases.push(Case::holds(format!("n={n} {label} ({} → {})", f.source(), f.target()), check_actcom(n, f)));
        }
    }
    cases
}

fn bee(n: RangeInclusive<usize>, max: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in n {
        for total in 0..=max {
            for k in 0..=total {
                let l = total - k;
                let (rank, count) = bee_rank(n, k, l);
                let inputs = format!("n={n} k={k} l={l}");
                if total <= n {
                    cases.push(Case::compare(format!("{inputs} rank"), format!("rank {count}"), Ok(format!("rank {rank}"))));
                    let eq = equivariant_dim(n, k, l);
                    cases.push(Case::compare(
                        format!("{inputs} equivariant dimension"),
                        format!("dimension {rank}"),
                        Ok(format!("dimension {eq}")),
                    ));
                } else {
                    let got = if rank < count { format!("rank below {count}") } else { format!("rank {rank}") };
                    cases.push(Case::compare(format!("{inputs} rank"), format!("rank below {count}"), Ok(got)));
                }
            }
        }
    }
    cases
}

fn faithful(max: usize) -> Vec<Case> {
    (0..=max)
        .flat_map(|total| (0..=total).map(move |k| (k, total - k)))
        .map(|(k, l)| Case::holds(format!("distinct leading terms for {} diagrams {k} → {l}", bell(k + l)), check_faithful(k, l)))
        .collect()
}

fn biproduct() -> Vec<Case> {
    match BiproductWitness::new().and_then(|w| w.check()) {
        Ok(checks) => checks.into_iter().map(|(name, ok)| Case::holds(name, Ok(ok))).collect(),
        Err(e) => vec![Case::holds("biproduct witness", Err(e))],
    }
}

fn k0_stirling(max: usize) -> Vec<Case> {
    let mut cases: Vec<Case> =
        (1..=max).map(|k| Case::holds(format!("normal order of (p₁⁺p₁⁻)^{k}"), stirling_normal_order_check(k))).collect();
    let summands = mail_summands(1);
    let objects = summands.as_ref().map_err(Clone::clone).map(|s| s.iter().map(|(i, _)| i.source().to_string()).join(" ⊕ "));
    let expected = [2, 1]
        .map(|m| HeisObject::repeat(Orientation::Up, m).concat(&HeisObject::repeat(Orientation::Down, m)).to_string())
        .join(" ⊕ ");
    cases.push(Case::compare("summands of (↑↓)²", expected, objects));
    let multiplicities = (1..=2).map(|l| stirling(2, l).to_string()).join(",");
    cases.push(Case::compare("multiplicities of (↑↓)²", "1,1", Ok(multiplicities)));
    cases.push(Case::holds("(↑↓)² is the direct sum of its summands", summands.and_then(|s| is_direct_sum(&s))));
    cases
}

fn filtration(max: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for lambda in (1..=max).flat_map(Partition::all) {
        match LeadingClassCheck::new(&lambda) {
            Ok(check) => {
                cases.push(Case::holds(
                    format!("Ψ(e_{lambda}) − d(e_{lambda}) lies below degree {}", lambda.size()),
                    Ok(check.congruent),
                ));
                cases.push(Case::holds(
                    format!("top class of Ψ(e_{lambda}) is Δ^K(s_{lambda})"),
                    Ok(check.class == check.kronecker),
                ));
            }
            Err(e) => cases.push(Case::holds(format!("leading class of {lambda}"), Err(e))),
        }
    }
    cases
}

/// Kronecker coefficients by summing characters over every permutation of `k` points.
pub fn brute_force_kronecker(lambda: &Partition) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    let k = lambda.size();
    let mut class_sizes: BTreeMap<Partition, i64> = BTreeMap::new();
    for perm in (0..k).permutations(k) {
        *class_sizes.entry(cycle_type(&perm)).or_insert(0) += 1;
    }
    let order = factorial(k) as i64;
    let mut out = BTreeMap::new();
    for mu in Partition::all(k) {
        for nu in Partition::all(k) {
            let mut sum = 0i64;
            for (rho, size) in &class_sizes {
                sum += size * mn_character(lambda, rho)? * mn_character(&mu, rho)? * mn_character(&nu, rho)?;
            }
            if sum % order != 0 {
                return Err(Error::IntegralityViolation(format!("character sum {sum} over {order} for {lambda}, {mu}, {nu}")));
            }
            if sum != 0 {
                out.insert((mu.clone(), nu), BigInt::from(sum / order));
            }
        }
    }
    Ok(out)
}

fn power(n: usize) -> SymFuncElem {
    SymFuncElem::power(Partition::new(vec![n]).expect("one part"))
}

fn kronecker(max: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    let schurs: Vec<Partition> = (0..=max).flat_map(Partition::all).collect();
    for lambda in &schurs {
        let got = kronecker_coproduct(&SymFuncElem::schur(lambda.clone()));
        let ok = brute_force_kronecker(lambda).and_then(|oracle| Ok(got? == oracle));
        cases.push(Case::holds(format!("Δ^K(s_{lambda}) against the character sum"), ok));
    }
    let images: Vec<Result<RHeisElem>> = (1..=max + 1).map(|n| kdelta_multiplicative(&power(n))).collect();
    for (i, j) in (0..images.len()).tuple_combinations() {
        let commute = || -> Result<bool> {
            let (a, b) = (images[i].clone()?, images[j].clone()?);
            Ok(heis_double_mul(&a, &b)?.add(&heis_double_mul(&b, &a)?.scale(&BigInt::from(-1))).is_zero())
        };
        cases.push(Case::holds(format!("images of p_{} and p_{} commute", i + 1, j + 1), commute()));
    }
    let embedded: Result<Vec<RHeisElem>> = schurs.iter().map(|l| kdelta_embed(&SymFuncElem::schur(l.clone()))).collect();
    cases.push(Case::holds(
        format!("Δ^K(s_λ) for {} partitions of size at most {max} are independent", schurs.len()),
        embedded.map(|e| independent(&e)),
    ));
    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn names_round_trip() {
        for s in SuiteName::ALL {
            assert_eq!(s.name().parse::<SuiteName>().unwrap(), s);
        }
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn bell_numbers() {
        assert_eq!((0..8).map(bell).collect::<Vec<_>>(), vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn brute_force_oracle_small_values() {
        // s_(2,1) * s_(2,1) = s_3 + s_21 + s_111 + s_21 in the internal product.
        let l = Partition::parse("2,1").unwrap();
        let k = brute_force_kronecker(&l).unwrap();
        assert_eq!(k[&(l.clone(), l.clone())], BigInt::from(1));
        assert_eq!(k[&(Partition::parse("3").unwrap(), l.clone())], BigInt::from(1));
        assert!(k.values().all(|c| !c.is_zero()));
    }

    #[test]
    fn size_guard_refuses_large_runs() {
        let params = SuiteParams { n: Some(20..=20), max_size: Some(6), ..Default::default() };
        assert!(matches!(run_suite(SuiteName::Bee, &params), Err(Error::UnsupportedConfiguration(_))));
    }

    #[test]
    fn reports_are_deterministic() {
        let params = SuiteParams { n: Some(2..=2), max_size: Some(2), seed: 11, force: false };
        let a = run_suite(SuiteName::Actcom, &params).unwrap();
        let b = run_suite(SuiteName::Actcom, &params).unwrap();
        assert!(a.pass);
        assert_eq!(a.cases, b.cases);
    }
}
