//! Hyperbolicity decisions for `ℚS` and `ℚ(√−d)S`, cross-checked against
//! the algebra oracles, and extraction of the non-semisimple block type.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{contracted_algebra, radical, RadicalInfo};
use crate::error::{Error, Result};
use crate::groups::{exceptional_desc, higman_desc, quadratic_desc, type2_desc, GroupDesc, GroupName, QuadraticClass};
use crate::rees::{fixture_m, fixture_m1, fixture_t2, fixture_t2hat, fixture_t2prime};
use crate::semigroup::{isomorphic, principal_series, FactorKind, FiniteSemigroup, PrincipalSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    QuadraticImaginary(i64),
}

impl FieldSpec {
    pub fn quadratic(d: i64) -> Result<Self> {
        if is_square_free(d) {
            Ok(FieldSpec::QuadraticImaginary(d))
        } else {
            Err(Error::InvalidD(d))
        }
    }
}

pub fn is_square_free(d: i64) -> bool {
    if d < 1 {
        return false;
    }
    let mut k = 2i64;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    NilpotentFreeSemisimple,
    SemisimpleWithNilpotents,
    NonSemisimple,
    NotHyperbolic,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorTag {
    Higman,
    Type2Cyclic,
    ExceptionalGroup,
    ExceptionalRees,
    NullFactor,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    /// Size of the ideal `S_i` whose top J-class this factor is.
    pub ideal_size: usize,
    pub tag: FactorTag,
    /// Group name, exceptional tag (`M`, `M1`, `S3`, ...) or a short shape.
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    /// A factor outside every permitted class.
    DisallowedFactor,
    /// More than one factor outside the Higman groups.
    TooManyExceptional,
    /// Group factors that match no row of the quadratic table.
    QuadraticTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Offending factor positions in `factors`.
    pub factors: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub radical_dim: usize,
    pub j_squared_zero: bool,
    pub unital: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuadraticRow {
    /// Elementary abelian 2-groups plus at most one `C3`, `C4` or `Q8`.
    A,
    /// `d = 1`: abelian of exponent dividing 4 plus at most one `C8`.
    B,
    /// `d = 3`: abelian of exponent dividing 6.
    C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticReport {
    pub d: i64,
    pub row: Option<QuadraticRow>,
    pub classes: Vec<QuadraticClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub hyperbolic: bool,
    pub regime: Regime,
    pub factors: Vec<FactorReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    pub oracle: OracleReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units_finite: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadratic: Option<QuadraticReport>,
}

impl Verdict {
    pub fn count(&self, tag: FactorTag) -> usize {
        self.factors.iter().filter(|f| f.tag == tag).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}

/// Everything the deciders share: the series, the contracted algebra of
/// `S^θ` and its radical.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub series: PrincipalSeries,
    pub radical: RadicalInfo,
    pub factors: Vec<FactorReport>,
}

fn group_tag(g: &GroupDesc) -> (FactorTag, String) {
    if higman_desc(g) {
        (FactorTag::Higman, g.name())
    } else if let Some(t) = type2_desc(g) {
        (FactorTag::Type2Cyclic, format!("{t:?}"))
    } else if let Some(e) = exceptional_desc(g) {
        (FactorTag::ExceptionalGroup, format!("{e:?}"))
    } else {
        (FactorTag::Other, format!("group {}", g.name()))
    }
}

fn tag_factor(kind: &FactorKind, quotient: &FiniteSemigroup) -> (FactorTag, String) {
    match kind {
        FactorKind::Null => (FactorTag::NullFactor, "null of order 2".into()),
        FactorKind::Group(g) | FactorKind::GroupWithZero(g) => group_tag(g),
        FactorKind::ReesMatrix(_) if quotient.order() == 5 => {
            if isomorphic(quotient, &fixture_m()).is_some() {
                (FactorTag::ExceptionalRees, "M".into())
            } else if isomorphic(quotient, &fixture_m1()).is_some() {
                (FactorTag::ExceptionalRees, "M1".into())
            } else {
                (FactorTag::Other, kind.short())
            }
        }
        FactorKind::ReesMatrix(_) => (FactorTag::Other, kind.short()),
    }
}

/// Series, unity check and radical of `ℚ₀S^θ`.
pub fn analyze(s: &FiniteSemigroup) -> Result<Analysis> {
    let series = principal_series(s);
    let algebra = contracted_algebra(&series.semigroup)?;
    if algebra.unity().is_none() {
        return Err(Error::NonUnital);
    }
    let radical = radical(&algebra);
    let factors = series
        .factors
        .iter()
        .zip(&series.ideals)
        .map(|(f, ideal)| {
            let (tag, detail) = tag_factor(&f.kind, &f.quotient);
            FactorReport { ideal_size: ideal.len(), tag, detail }
        })
        .collect();
    Ok(Analysis { series, radical, factors })
}

fn positions(factors: &[FactorReport], pred: impl Fn(FactorTag) -> bool) -> Vec<usize> {
    factors.iter().enumerate().filter(|(_, f)| pred(f.tag)).map(|(i, _)| i).collect()
}

fn oracle_report(a: &Analysis) -> OracleReport {
    OracleReport { radical_dim: a.radical.dim, j_squared_zero: a.radical.j_squared_zero(), unital: true }
}

fn inconsistent(msg: String) -> Error {
    Error::InternalInconsistency(msg)
}

/// Decides whether `ℚS` has the hyperbolic property.
pub fn classify_q(s: &FiniteSemigroup) -> Result<Verdict> {
    let a = analyze(s)?;
    let factors = a.factors.clone();
    let count = |t: FactorTag| factors.iter().filter(|f| f.tag == t).count();
    let (c, g, r, z, o) = (
        count(FactorTag::Type2Cyclic),
        count(FactorTag::ExceptionalGroup),
        count(FactorTag::ExceptionalRees),
        count(FactorTag::NullFactor),
        count(FactorTag::Other),
    );
    let special = c + g + r + z;
    let hyperbolic = o == 0 && special <= 1;
    let violation = if o > 0 {
        let bad = positions(&factors, |t| t == FactorTag::Other);
        let names: Vec<&str> = bad.iter().map(|&i| factors[i].detail.as_str()).collect();
        Some(Violation {
            kind: ViolationKind::DisallowedFactor,
            message: format!("factor outside the permitted classes: {}", names.join(", ")),
            factors: bad,
        })
    } else if special > 1 {
        let bad = positions(&factors, |t| t != FactorTag::Higman);
        Some(Violation {
            kind: ViolationKind::TooManyExceptional,
            message: format!("{special} non-Higman factors; at most one is allowed"),
            factors: bad,
        })
    } else {
        None
    };
    let regime = if !hyperbolic {
        Regime::NotHyperbolic
    } else if z == 1 {
        Regime::NonSemisimple
    } else if g + r == 1 {
        Regime::SemisimpleWithNilpotents
    } else {
        Regime::NilpotentFreeSemisimple
    };
    check_oracle(&a, regime)?;
    Ok(Verdict {
        hyperbolic,
        regime,
        factors,
        violation,
        oracle: oracle_report(&a),
        units_finite: (hyperbolic && special == 0).then_some(true),
        quadratic: None,
    })
}

fn check_oracle(a: &Analysis, regime: Regime) -> Result<()> {
    let rad = &a.radical;
    let t = &a.series.semigroup;
    let nilpotents = t.nilpotents()?;
    match regime {
        Regime::NonSemisimple => {
            if rad.dim != 1 || !rad.j_squared_zero() {
                return Err(inconsistent(format!(
                    "non-semisimple verdict but radical has dim {} and nilpotency index {}",
                    rad.dim, rad.nilpotency_index
                )));
            }
            let pos = a.series.factors.iter().position(|f| f.kind == FactorKind::Null).expect("one null factor");
            let f = a.series.factors[pos].elements[0];
            let theta = t.zero().expect("series semigroup has a zero");
            let labels = |xs: &[usize]| xs.iter().map(|&x| t.label(x)).collect::<Vec<_>>();
            if nilpotents == [f] {
                // f nilpotent in S: {θ, f} is an ideal and J = ℚf.
                let ideal = t.elements().all(|s| [t.mul(s, f), t.mul(f, s)].iter().all(|&p| p == theta || p == f));
                let spanned = rad.basis[0].iter().enumerate().all(|(i, c)| c.is_zero() == (i != f - usize::from(f > theta)));
                if !ideal || !spanned {
                    return Err(inconsistent(format!(
                        "nilpotent {} of the null factor should span the radical and an ideal with θ",
                        t.label(f)
                    )));
                }
            } else if nilpotents.is_empty() {
                // Otherwise f is the unique nilpotent of S / S_{i+1}.
                let hat = t.rees_quotient(&a.series.ideals[pos + 1])?;
                let ok = hat.nilpotents()?.len() == 1;
                if !ok {
                    return Err(inconsistent(format!(
                        "null factor element {} is not the unique nilpotent modulo the next ideal",
                        t.label(f)
                    )));
                }
            } else {
                return Err(inconsistent(format!(
                    "non-semisimple verdict expects at most the null-factor element {} as nilpotent, found {:?}",
                    t.label(f),
                    labels(&nilpotents)
                )));
            }
        }
        Regime::NilpotentFreeSemisimple => {
            if rad.dim != 0 || !nilpotents.is_empty() {
                return Err(inconsistent(format!(
                    "nilpotent-free verdict but radical dim {} and {} nilpotents",
                    rad.dim,
                    nilpotents.len()
                )));
            }
        }
        Regime::SemisimpleWithNilpotents => {
            if rad.dim != 0 {
                return Err(inconsistent(format!("semisimple verdict but radical dim {}", rad.dim)));
            }
        }
        Regime::NotHyperbolic => {}
    }
    Ok(())
}

fn row_a(groups: &[&GroupDesc], d: i64) -> bool {
    let extra: Vec<QuadraticClass> =
        groups.iter().map(|g| quadratic_desc(g)).filter(|c| *c != QuadraticClass::ElemAbelian2).collect();
    match extra.as_slice() {
        [] => true,
        [QuadraticClass::C3] => d != 3,
        [QuadraticClass::C4] => d != 1,
        [QuadraticClass::Q8] => d % 8 == 7,
        _ => false,
    }
}

fn row_b(groups: &[&GroupDesc], d: i64) -> bool {
    d == 1 && {
        let c8 = groups.iter().filter(|g| g.recognized == GroupName::Cyclic(8)).count();
        c8 <= 1
            && groups.iter().all(|g| g.recognized == GroupName::Cyclic(8) || (g.abelian && 4 % g.exponent == 0))
    }
}

fn row_c(groups: &[&GroupDesc], d: i64) -> bool {
    d == 3 && groups.iter().all(|g| g.abelian && 6 % g.exponent == 0)
}

/// Which row of the quadratic table, tried in order (a), (b), (c),
/// admits these group factors.
pub fn quadratic_row(groups: &[&GroupDesc], d: i64) -> Option<QuadraticRow> {
    if row_a(groups, d) {
        Some(QuadraticRow::A)
    } else if row_b(groups, d) {
        Some(QuadraticRow::B)
    } else if row_c(groups, d) {
        Some(QuadraticRow::C)
    } else {
        None
    }
}

/// Tests a single row, e.g. to report why it does not apply.
pub fn quadratic_row_matches(row: QuadraticRow, groups: &[&GroupDesc], d: i64) -> bool {
    match row {
        QuadraticRow::A => row_a(groups, d),
        QuadraticRow::B => row_b(groups, d),
        QuadraticRow::C => row_c(groups, d),
    }
}

/// Decides whether `ℚ(√−d)S` has the hyperbolic property.
pub fn classify_quadratic(s: &FiniteSemigroup, d: i64) -> Result<Verdict> {
    FieldSpec::quadratic(d)?;
    let a = analyze(s)?;
    let non_group: Vec<usize> =
        a.series.factors.iter().enumerate().filter(|(_, f)| f.kind.group().is_none()).map(|(i, _)| i).collect();
    let groups: Vec<&GroupDesc> = a.series.factors.iter().filter_map(|f| f.kind.group()).collect();
    let classes: Vec<QuadraticClass> = groups.iter().map(|g| quadratic_desc(g)).collect();
    let (row, violation) = if !non_group.is_empty() {
        let v = Violation {
            kind: ViolationKind::DisallowedFactor,
            message: "every principal factor must be a group (with zero)".into(),
            factors: non_group,
        };
        (None, Some(v))
    } else {
        match quadratic_row(&groups, d) {
            Some(row) => (Some(row), None),
            None => {
                let bad = (0..classes.len()).filter(|&i| classes[i] != QuadraticClass::ElemAbelian2).collect();
                let v = Violation {
                    kind: ViolationKind::QuadraticTable,
                    message: format!("group factors {classes:?} match no row of the table for d = {d}"),
                    factors: bad,
                };
                (None, Some(v))
            }
        }
    };
    let hyperbolic = row.is_some();
    let regime = if hyperbolic { Regime::NilpotentFreeSemisimple } else { Regime::NotHyperbolic };
    check_oracle(&a, regime)?;
    Ok(Verdict {
        hyperbolic,
        regime,
        factors: a.factors.clone(),
        violation,
        oracle: oracle_report(&a),
        units_finite: None,
        quadratic: Some(QuadraticReport { d, row, classes }),
    })
}

/// Dispatches on the field.
pub fn classify(s: &FiniteSemigroup, field: FieldSpec) -> Result<Verdict> {
    match field {
        FieldSpec::Rationals => classify_q(s),
        FieldSpec::QuadraticImaginary(d) => classify_quadratic(s, d),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockTag {
    T2,
    T2hat,
    T2prime,
    NoBlock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockWitnesses {
    pub e1: usize,
    pub en: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e3: Option<usize>,
    pub j0: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockType {
    pub tag: BlockTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BlockWitnesses>,
}

impl BlockWitnesses {
    /// Witnesses in the element order of the matching fixture, `θ` last.
    fn ordered(&self, theta: usize) -> Vec<usize> {
        match self.e3 {
            Some(e3) => vec![self.e1, self.en, e3, self.j0, theta],
            None => vec![self.e1, self.en, self.j0, theta],
        }
    }
}

/// Whether the witnessed elements multiply exactly like the fixture table.
pub fn witnessed_table_matches(s: &FiniteSemigroup, tag: BlockTag, w: &BlockWitnesses) -> bool {
    let fixture = match tag {
        BlockTag::T2 => fixture_t2(),
        BlockTag::T2hat => fixture_t2hat(),
        BlockTag::T2prime => fixture_t2prime(),
        BlockTag::NoBlock => return false,
    };
    let Some(theta) = s.zero() else { return false };
    let elems = w.ordered(theta);
    elems.len() == fixture.order()
        && fixture.elements().all(|x| fixture.elements().all(|y| s.mul(elems[x], elems[y]) == elems[fixture.mul(x, y)]))
}

/// The `T2` / `T̂2` / `T′2` block of a non-semisimple hyperbolic semigroup.
pub fn block_structure(s: &FiniteSemigroup) -> Result<BlockType> {
    let verdict = classify_q(s)?;
    if verdict.regime != Regime::NonSemisimple {
        return Err(Error::PreconditionViolated(format!(
            "block structure needs a non-semisimple hyperbolic semigroup, regime is {}",
            verdict.regime
        )));
    }
    let (t, _) = s.with_zero();
    let theta = t.zero().expect("with_zero");
    let j0 = match t.nilpotents()?.as_slice() {
        [j] => *j,
        other => {
            return Err(Error::PreconditionViolated(format!("expected one nilpotent, found {}", other.len())));
        }
    };
    let idempotents: Vec<usize> = t.idempotents().into_iter().filter(|&e| e != theta).collect();
    let lefts: Vec<usize> =
        idempotents.iter().copied().filter(|&e| t.mul(e, j0) == j0 && t.mul(j0, e) == theta).collect();
    let rights: Vec<usize> =
        idempotents.iter().copied().filter(|&e| t.mul(j0, e) == j0 && t.mul(e, j0) == theta).collect();
    for &e1 in &lefts {
        for &en in &rights {
            let (a, b) = (t.mul(e1, en), t.mul(en, e1));
            let found = if a == theta && b == theta {
                Some((BlockTag::T2, None))
            } else if a == j0 && b == theta {
                Some((BlockTag::T2hat, None))
            } else if a == b && t.mul(a, a) == a && a != theta {
                Some((BlockTag::T2prime, Some(a)))
            } else {
                None
            };
            if let Some((tag, e3)) = found {
                let w = BlockWitnesses { e1, en, e3, j0 };
                if witnessed_table_matches(&t, tag, &w) {
                    return Ok(BlockType { tag, witnesses: Some(w) });
                }
            }
        }
    }
    Ok(BlockType { tag: BlockTag::NoBlock, witnesses: None })
}
