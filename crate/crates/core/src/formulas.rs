//! Closed-form subgroup counts and their cross-check against enumeration.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{is_prime, multiplicative_order};
use crate::group::{Group, GroupError, MAX_ABELIAN_ORDER, MAX_ORDER};
use crate::lattice::count_subgroups;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponents must be at least 1")]
    ZeroExponent,
    #[error("no action of order {p} on Z_{q}^{b}: {p} does not divide {q} - 1")]
    Unrealizable { p: u64, q: u64, b: u32 },
    #[error("unsupported abelian shape")]
    UnsupportedShape,
}

/// The family `Z_{p^a} ⋉ Z_{q^b}` where the cyclic `p`-group acts through an
/// automorphism of order `p`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TwoPrimeParams {
    pub p: u64,
    pub q: u64,
    pub a: u32,
    pub b: u32,
}

impl TwoPrimeParams {
    pub fn new(p: u64, q: u64, a: u32, b: u32) -> Result<Self, FormulaError> {
        for x in [p, q] {
            if !is_prime(x) {
                return Err(FormulaError::NotPrime(x));
            }
        }
        if a == 0 || b == 0 {
            return Err(FormulaError::ZeroExponent);
        }
        if (q - 1) % p != 0 {
            return Err(FormulaError::Unrealizable { p, q, b });
        }
        Ok(TwoPrimeParams { p, q, a, b })
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.a) * self.q.pow(self.b)
    }

    /// Smallest multiplier of order exactly `p` modulo `q^b`.
    pub fn multiplier(&self) -> u64 {
        let n = self.q.pow(self.b);
        (2..n)
            .find(|&k| multiplicative_order(k, n) == Some(self.p))
            .expect("q = 1 mod p gives an automorphism of order p")
    }

    pub fn build(&self) -> Result<Group, GroupError> {
        let base = self.q.pow(self.b) as usize;
        let actor = self.p.pow(self.a) as usize;
        Group::semidirect_cyclic(base, actor, self.multiplier() as usize)
    }

    pub fn spec(&self) -> String {
        format!(
            "C{}:C{}[{}]",
            self.p.pow(self.a),
            self.q.pow(self.b),
            self.multiplier()
        )
    }
}

/// `q^b + (q^b - q)/(q - 1) + a(b + 1) + 1`.
pub fn two_prime_count(params: &TwoPrimeParams) -> u64 {
    let TwoPrimeParams { q, a, b, .. } = *params;
    let qb = q.pow(b);
    qb + (qb - q) / (q - 1) + a as u64 * (b as u64 + 1) + 1
}

/// Abelian `p`-groups with a known subgroup count.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum AbelianShape {
    /// `Z_{p^r} x Z_p`, `1 <= r <= 4`.
    RankTwo { r: u32 },
    /// `Z_{p^2} x Z_{p^2}`.
    Square,
    /// `Z_p x Z_p x Z_p`.
    ElementaryRankThree,
}

impl AbelianShape {
    pub fn factors(&self, p: u64) -> Vec<usize> {
        let p = p as usize;
        match *self {
            AbelianShape::RankTwo { r } => vec![p.pow(r), p],
            AbelianShape::Square => vec![p * p, p * p],
            AbelianShape::ElementaryRankThree => vec![p, p, p],
        }
    }

    pub fn label(&self, p: u64) -> String {
        self.factors(p)
            .iter()
            .map(|n| format!("Z{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn all() -> [AbelianShape; 6] {
        [
            AbelianShape::RankTwo { r: 1 },
            AbelianShape::RankTwo { r: 2 },
            AbelianShape::RankTwo { r: 3 },
            AbelianShape::RankTwo { r: 4 },
            AbelianShape::Square,
            AbelianShape::ElementaryRankThree,
        ]
    }
}

pub fn abelian_count(shape: AbelianShape, p: u64) -> Result<u64, FormulaError> {
    if !is_prime(p) {
        return Err(FormulaError::NotPrime(p));
    }
    Ok(match shape {
        AbelianShape::RankTwo { r: r @ 1..=4 } => r as u64 * p + r as u64 + 2,
        AbelianShape::RankTwo { .. } => return Err(FormulaError::UnsupportedShape),
        AbelianShape::Square => p * p + 3 * p + 5,
        AbelianShape::ElementaryRankThree => 2 * p * p + 2 * p + 4,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    TwoPrime,
    Abelian,
    /// `Z_p x Z_{p^{n-2}}` inside a `p`-group of order `p^n`.
    PGroupCenterTable,
    /// A single count stated without a formula.
    Stated,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Agree,
    Mismatch,
    /// Group order above the applicable cap.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub family: Family,
    pub label: String,
    /// Family-specific coordinates: `[p, q, a, b]`, `[p]`, or `[p, n]`.
    pub params: Vec<u64>,
    pub order: u64,
    pub expected: u64,
    pub enumerated: Option<u64>,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub max_order: u64,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn mismatches(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.status == Status::Mismatch)
    }

    pub fn all_agree(&self) -> bool {
        self.mismatches().next().is_none()
    }

    pub fn find(&self, family: Family, params: &[u64]) -> Option<&ReportRow> {
        self.rows
            .iter()
            .find(|r| r.family == family && r.params == params)
    }

    /// Plain-text rendering; the two-prime families are laid out as `a` by `b`
    /// grids, one per `(p, q)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let cell = |r: &ReportRow| match (r.status, r.enumerated) {
            (Status::Agree, _) => format!("{}", r.expected),
            (Status::Mismatch, Some(e)) => format!("{}!={}", r.expected, e),
            _ => format!("{}?", r.expected),
        };

        let mut pq: Vec<(u64, u64)> = self
            .rows
            .iter()
            .filter(|r| r.family == Family::TwoPrime)
            .map(|r| (r.params[0], r.params[1]))
            .collect();
        pq.dedup();
        for (p, q) in pq {
            let _ = writeln!(out, "Z_{{{p}^a}} ⋉ Z_{{{q}^b}} (q = {q}, p = {p})");
            let _ = writeln!(out, "{:>4} | {:>8} {:>8}", "a\\b", 1, 2);
            let rows: Vec<&ReportRow> = self
                .rows
                .iter()
                .filter(|r| r.family == Family::TwoPrime && r.params[..2] == [p, q])
                .collect();
            let max_a = rows.iter().map(|r| r.params[2]).max().unwrap_or(0);
            for a in 1..=max_a {
                let mut line = format!("{a:>4} |");
                for b in 1..=2 {
                    let c = rows
                        .iter()
                        .find(|r| r.params[2] == a && r.params[3] == b)
                        .map(|r| cell(r))
                        .unwrap_or_default();
                    let _ = write!(line, " {c:>8}");
                }
                let _ = writeln!(out, "{line}");
            }
            out.push('\n');
        }

        let _ = writeln!(out, "Z_p x Z_{{p^(n-2)}}");
        let _ = writeln!(out, "{:>4} | {:>8} {:>8} {:>8}", "p\\n", 3, 4, 5);
        for p in [2u64, 3] {
            let mut line = format!("{p:>4} |");
            for n in 3..=5u64 {
                let c = self
                    .find(Family::PGroupCenterTable, &[p, n])
                    .map(&cell)
                    .unwrap_or_default();
                let _ = write!(line, " {c:>8}");
            }
            let _ = writeln!(out, "{line}");
        }
        out.push('\n');

        let _ = writeln!(out, "abelian p-groups");
        for r in self.rows.iter().filter(|r| r.family == Family::Abelian) {
            let _ = writeln!(out, "  {:<16} {:>8}  {:?}", r.label, cell(r), r.status);
        }
        for r in self.rows.iter().filter(|r| r.family == Family::Stated) {
            let _ = writeln!(out, "{:<18} {:>8}  {:?}", r.label, cell(r), r.status);
        }
        let total = self.rows.len();
        let skipped = self.rows.iter().filter(|r| r.status == Status::Skipped).count();
        let bad = self.mismatches().count();
        let _ = writeln!(
            out,
            "\n{} checked, {} agree, {} mismatched, {} skipped (order cap {})",
            total - skipped,
            total - skipped - bad,
            bad,
            skipped,
            self.max_order
        );
        out
    }
}

/// Every formula instance covered by [`cross_validate`], in report order.
pub fn two_prime_instances() -> Vec<TwoPrimeParams> {
    let mut out = Vec::new();
    for (p, q, max_a) in [(2, 3, 5), (2, 5, 4), (2, 7, 3), (3, 7, 3)] {
        for a in 1..=max_a {
            for b in 1..=2 {
                out.push(TwoPrimeParams::new(p, q, a, b).expect("realizable"));
            }
        }
    }
    out
}

fn row(
    family: Family,
    label: String,
    params: Vec<u64>,
    order: u64,
    expected: u64,
    cap: u64,
    build: impl FnOnce() -> Result<Group, GroupError>,
) -> ReportRow {
    let (enumerated, status) = if order > cap {
        (None, Status::Skipped)
    } else {
        match build() {
            Ok(g) => {
                let n = count_subgroups(&g) as u64;
                (Some(n), if n == expected { Status::Agree } else { Status::Mismatch })
            }
            Err(_) => (None, Status::Mismatch),
        }
    };
    ReportRow {
        family,
        label,
        params,
        order,
        expected,
        enumerated,
        status,
    }
}

/// Builds each formula's group where it fits under `max_order` and compares
/// the formula against the enumerated lattice. Non-abelian instances are
/// further limited by [`MAX_ORDER`], abelian ones by [`MAX_ABELIAN_ORDER`].
pub fn cross_validate(max_order: u64) -> Report {
    let general_cap = max_order.min(MAX_ORDER as u64);
    let abelian_cap = max_order.min(MAX_ABELIAN_ORDER as u64);
    let mut rows = Vec::new();

    for params in two_prime_instances() {
        rows.push(row(
            Family::TwoPrime,
            params.spec(),
            vec![params.p, params.q, params.a as u64, params.b as u64],
            params.order(),
            two_prime_count(&params),
            general_cap,
            || params.build(),
        ));
    }

    for p in [2u64, 3] {
        for n in 3..=5u32 {
            let shape = AbelianShape::RankTwo { r: n - 2 };
            let factors = shape.factors(p);
            rows.push(row(
                Family::PGroupCenterTable,
                shape.label(p),
                vec![p, n as u64],
                p.pow(n - 1),
                abelian_count(shape, p).expect("supported"),
                abelian_cap,
                || Group::abelian(&factors),
            ));
        }
    }

    for p in [2u64, 3, 5, 7] {
        for shape in AbelianShape::all() {
            let factors = shape.factors(p);
            let order = factors.iter().map(|&n| n as u64).product();
            rows.push(row(
                Family::Abelian,
                shape.label(p),
                vec![p],
                order,
                abelian_count(shape, p).expect("supported"),
                abelian_cap,
                || Group::abelian(&factors),
            ));
        }
    }

    // Z4 acting faithfully on Z5.
    rows.push(row(
        Family::Stated,
        "C4:C5[2]".into(),
        vec![],
        20,
        14,
        general_cap,
        || Group::semidirect_cyclic(5, 4, 2),
    ));

    Report { max_order, rows }
}
