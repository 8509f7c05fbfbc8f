//! Schubert structure constants `c_{λ,μ}^ν` from tableau counts, and
//! consistency checks on the resulting multiplication tables.

mod oracle;

pub use oracle::lr_oracle_type_a;

use std::collections::BTreeMap;

use crate::dualequiv::partition_into_classes;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::jdt::rectify;
use crate::rootsys::CominusculePoset;
use crate::shapes::{canonical_filling, enumerate_syt, format_shape, Shape, SkewShape, Tableau};

/// Whether the power of two from short roots is included.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    #[default]
    Cominuscule,
    Minuscule,
}

/// Which tableau count produces the coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// Dual equivalence classes of `SYT(ν/λ)` rectifying to shape `μ`.
    #[default]
    DualClass,
    /// Tableaux of shape `ν/λ` rectifying to the canonical filling of `μ`.
    Rectification,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::DualClass => "dualclass",
            Rule::Rectification => "rectify",
        }
    }

    pub fn parse(s: &str) -> Result<Rule> {
        match s {
            "dualclass" | "dual-class" => Ok(Rule::DualClass),
            "rectify" | "rectification" => Ok(Rule::Rectification),
            _ => Err(Error::Parameter(format!("unknown rule {s:?}; expected dualclass or rectify"))),
        }
    }
}

fn check_ideal(poset: &CominusculePoset, s: Shape, what: &str) -> Result<()> {
    if s.bits() >> poset.len() != 0 || !poset.is_ideal(s) {
        return Err(Error::Shape(format!("{what} is not an order ideal of {}", poset.space().name())));
    }
    Ok(())
}

fn two_power(poset: &CominusculePoset, lambda: Shape, mu: Shape, nu: Shape, convention: Convention) -> Result<u64> {
    if convention == Convention::Minuscule {
        return Ok(1);
    }
    let e = poset.shortroots(nu.minus(lambda)) as i64 - poset.shortroots(mu) as i64;
    if e < 0 {
        return Err(Error::Rule(format!(
            "negative short-root exponent for {} / {} against {}",
            format_shape(poset, nu),
            format_shape(poset, lambda),
            format_shape(poset, mu)
        )));
    }
    Ok(1 << e)
}

/// Validates the three shapes and reports whether the coefficient can be
/// nonzero at all (degree and containment).
fn admissible(poset: &CominusculePoset, lambda: Shape, mu: Shape, nu: Shape) -> Result<bool> {
    check_ideal(poset, lambda, "λ")?;
    check_ideal(poset, mu, "μ")?;
    check_ideal(poset, nu, "ν")?;
    Ok(lambda.len() + mu.len() == nu.len() && lambda.is_subset(nu))
}

/// Counts dual equivalence classes of `SYT(ν/λ)` rectifying to shape `μ`,
/// times `2^{shortroots(ν/λ) - shortroots(μ)}` in the cominuscule convention.
pub fn coeff_dualclass(
    poset: &CominusculePoset,
    lambda: Shape,
    mu: Shape,
    nu: Shape,
    convention: Convention,
) -> Result<u64> {
    if !admissible(poset, lambda, mu, nu)? {
        return Ok(0);
    }
    let syt = enumerate_syt(poset, SkewShape { inner: lambda, outer: nu });
    let classes = partition_into_classes(poset, &syt);
    let n = classes.iter().filter(|c| rectify(poset, &c[0]).outer() == mu).count() as u64;
    if n == 0 {
        return Ok(0);
    }
    Ok(n * two_power(poset, lambda, mu, nu, convention)?)
}

/// Counts tableaux of shape `ν/λ` rectifying to the canonical filling of
/// `μ`, times the short-root power in the cominuscule convention.
pub fn coeff_rectification(
    poset: &CominusculePoset,
    lambda: Shape,
    mu: Shape,
    nu: Shape,
    convention: Convention,
) -> Result<u64> {
    coeff_rectification_to(poset, lambda, &canonical_filling(SkewShape::straight(mu)), nu, convention)
}

/// As [`coeff_rectification`], against an arbitrary standard filling `t_mu`.
pub fn coeff_rectification_to(
    poset: &CominusculePoset,
    lambda: Shape,
    t_mu: &Tableau,
    nu: Shape,
    convention: Convention,
) -> Result<u64> {
    if !t_mu.is_straight() {
        return Err(Error::Tableau("the target tableau must have straight shape".into()));
    }
    t_mu.validate(poset)?;
    let mu = t_mu.outer();
    if !admissible(poset, lambda, mu, nu)? {
        return Ok(0);
    }
    let n = enumerate_syt(poset, SkewShape { inner: lambda, outer: nu })
        .iter()
        .filter(|t| rectify(poset, t) == *t_mu)
        .count() as u64;
    if n == 0 {
        return Ok(0);
    }
    Ok(n * two_power(poset, lambda, mu, nu, convention)?)
}

pub fn coeff(
    poset: &CominusculePoset,
    lambda: Shape,
    mu: Shape,
    nu: Shape,
    rule: Rule,
    convention: Convention,
) -> Result<u64> {
    match rule {
        Rule::DualClass => coeff_dualclass(poset, lambda, mu, nu, convention),
        Rule::Rectification => coeff_rectification(poset, lambda, mu, nu, convention),
    }
}

/// All coefficients `c_{λ,μ}^ν` for fixed `λ ⊆ ν`, keyed by `μ`. One
/// enumeration of `SYT(ν/λ)` serves every `μ`.
fn coefficients_over(
    poset: &CominusculePoset,
    lambda: Shape,
    nu: Shape,
    rule: Rule,
    convention: Convention,
) -> Result<Vec<(Shape, u64)>> {
    let syt = enumerate_syt(poset, SkewShape { inner: lambda, outer: nu });
    let mut counts: BTreeMap<Shape, u64> = BTreeMap::new();
    match rule {
        Rule::DualClass => {
            for class in partition_into_classes(poset, &syt) {
                *counts.entry(rectify(poset, &class[0]).outer()).or_default() += 1;
            }
        }
        Rule::Rectification => {
            for t in &syt {
                let r = rectify(poset, t);
                if r == canonical_filling(SkewShape::straight(r.outer())) {
                    *counts.entry(r.outer()).or_default() += 1;
                }
            }
        }
    }
    counts.into_iter().map(|(mu, n)| Ok((mu, n * two_power(poset, lambda, mu, nu, convention)?))).collect()
}

/// Multiplication table in the Schubert basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    pub family: String,
    pub params: Vec<usize>,
    pub rule: Rule,
    pub convention: Convention,
    /// Basis shapes (all order ideals), by size then bits.
    pub basis: Vec<Shape>,
    /// `(λ, μ) -> {ν: c}` for every pair of basis shapes; zero entries omitted.
    pub products: BTreeMap<(Shape, Shape), BTreeMap<Shape, u64>>,
}

impl MultiplicationTable {
    pub fn coeff(&self, lambda: Shape, mu: Shape, nu: Shape) -> u64 {
        self.products.get(&(lambda, mu)).and_then(|m| m.get(&nu)).copied().unwrap_or(0)
    }

    pub fn product(&self, lambda: Shape, mu: Shape) -> BTreeMap<Shape, u64> {
        self.products.get(&(lambda, mu)).cloned().unwrap_or_default()
    }
}

/// Default cap on `|Λ|` for table builds.
pub const DEFAULT_TABLE_CAP: usize = 16;

/// Builds the full multiplication table. Work is split over `(λ, ν)` pairs.
pub fn build_table(
    poset: &CominusculePoset,
    rule: Rule,
    convention: Convention,
    cap: usize,
    exec: Exec,
) -> Result<MultiplicationTable> {
    if poset.len() > cap {
        return Err(Error::SizeCap { boxes: poset.len(), cap });
    }
    let basis = poset.ideals();
    let pairs: Vec<(Shape, Shape)> =
        basis.iter().flat_map(|&l| basis.iter().filter(move |&&n| l.is_subset(n)).map(move |&n| (l, n))).collect();
    let rows = exec.try_map(&pairs, |&(l, n)| coefficients_over(poset, l, n, rule, convention))?;
    let mut products: BTreeMap<(Shape, Shape), BTreeMap<Shape, u64>> = BTreeMap::new();
    for &l in &basis {
        for &m in &basis {
            products.insert((l, m), BTreeMap::new());
        }
    }
    for (&(l, n), row) in pairs.iter().zip(rows) {
        for (m, c) in row {
            if c > 0 {
                products.get_mut(&(l, m)).expect("basis pair").insert(n, c);
            }
        }
    }
    let space = poset.space();
    Ok(MultiplicationTable {
        family: space.family_name().to_string(),
        params: space.params(),
        rule,
        convention,
        basis,
        products,
    })
}

/// Outcome of [`verify_ring`]; each failure is described in `failures`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingReport {
    pub commutative: bool,
    pub associative: bool,
    pub identity: bool,
    pub graded: bool,
    pub triples_checked: usize,
    pub failures: Vec<String>,
}

impl RingReport {
    pub fn ok(&self) -> bool {
        self.commutative && self.associative && self.identity && self.graded
    }
}

fn mul_vec(t: &MultiplicationTable, a: &BTreeMap<Shape, u64>, b: Shape) -> BTreeMap<Shape, u64> {
    let mut out: BTreeMap<Shape, u64> = BTreeMap::new();
    for (&x, &cx) in a {
        for (nu, c) in t.product(x, b) {
            *out.entry(nu).or_default() += cx * c;
        }
    }
    out
}

/// Checks commutativity, associativity on all triples, the identity `σ_∅`
/// and degree grading.
pub fn verify_ring(table: &MultiplicationTable, exec: Exec) -> RingReport {
    let basis = &table.basis;
    let mut failures = Vec::new();

    let mut commutative = true;
    let mut graded = true;
    for &l in basis {
        for &m in basis {
            if table.product(l, m) != table.product(m, l) {
                commutative = false;
                failures.push(format!("σ_{:#x}·σ_{:#x} ≠ σ_{:#x}·σ_{:#x}", l.bits(), m.bits(), m.bits(), l.bits()));
            }
            for &nu in table.product(l, m).keys() {
                if nu.len() != l.len() + m.len() {
                    graded = false;
                    failures.push(format!(
                        "degree violated in σ_{:#x}·σ_{:#x} at {:#x}",
                        l.bits(),
                        m.bits(),
                        nu.bits()
                    ));
                }
            }
        }
    }

    let mut identity = true;
    for &m in basis {
        let p = table.product(Shape::EMPTY, m);
        if p.len() != 1 || p.get(&m) != Some(&1) {
            identity = false;
            failures.push(format!("σ_∅·σ_{:#x} ≠ σ_{:#x}", m.bits(), m.bits()));
        }
    }

    let bad: Vec<Vec<String>> = exec.map(basis, |&a| {
        let mut errs = Vec::new();
        for &b in basis {
            let ab = table.product(a, b);
            for &c in basis {
                let left = mul_vec(table, &ab, c);
                let bc = table.product(b, c);
                let mut right: BTreeMap<Shape, u64> = BTreeMap::new();
                for (&y, &cy) in &bc {
                    for (nu, c2) in table.product(a, y) {
                        *right.entry(nu).or_default() += cy * c2;
                    }
                }
                if left != right {
                    errs.push(format!(
                        "(σ_{:#x}σ_{:#x})σ_{:#x} ≠ σ_{:#x}(σ_{:#x}σ_{:#x})",
                        a.bits(),
                        b.bits(),
                        c.bits(),
                        a.bits(),
                        b.bits(),
                        c.bits()
                    ));
                }
            }
        }
        errs
    });
    let assoc_failures: Vec<String> = bad.into_iter().flatten().collect();
    let associative = assoc_failures.is_empty();
    failures.extend(assoc_failures);

    RingReport { commutative, associative, identity, graded, triples_checked: basis.len().pow(3), failures }
}
