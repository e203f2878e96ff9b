//! Brute-force search for small positive rational solutions of
//! `xyz(x+y+z) = a`, plus verification of the bundled reference table.
//!
//! For fixed positive x and y the equation is a quadratic in z,
//! `xyz² + xy(x+y)z - a = 0`, with exactly one positive root when the
//! discriminant is a rational square. The search enumerates reduced
//! fractions x >= y of bounded height via the Stern-Brocot tree, solves for
//! z, and keeps canonically ordered rows x >= y >= z.
//!
//! Searching distinct values of `a` is embarrassingly parallel; with the
//! `parallel` feature the sweep runs on rayon with deterministic merged
//! output (rows ordered by a, then by the smallness ranking).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::exact::rational::{exact_sqrt_u128, gcd_u128};
use crate::exact::{height, parse_rational, rat_sqrt, ExactRational};
use crate::{Error, Result};

/// The bundled table of small positive solutions for a < 100, one row per
/// line in the `a,x,y,z` schema.
pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");

/// Height bound and target value for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Target value of the equation.
    pub a: u32,
    /// Maximum height (max of numerator and denominator) of x and y.
    pub height: u32,
}

/// One solution row; components are kept in canonical order x >= y >= z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub a: u32,
    pub x: ExactRational,
    pub y: ExactRational,
    pub z: ExactRational,
}

impl TableRow {
    pub fn to_csv(&self) -> String {
        format!("{},{},{},{}", self.a, self.x, self.y, self.z)
    }

    /// x·y·z·(x+y+z) == a with all components positive.
    pub fn verifies(&self) -> bool {
        if !(self.x.is_positive() && self.y.is_positive() && self.z.is_positive()) {
            return false;
        }
        let product = &self.x * &self.y * &self.z;
        let sum = &self.x + &self.y + &self.z;
        product * sum == ExactRational::from_integer(BigInt::from(self.a))
    }

    /// Largest component height; the first key of the smallness ranking.
    pub fn max_height(&self) -> BigInt {
        height(&self.x).max(height(&self.y)).max(height(&self.z))
    }
}

/// Sort key: max component height, then (x, y, z) lexicographically.
fn rank_cmp(lhs: &TableRow, rhs: &TableRow) -> Ordering {
    lhs.max_height()
        .cmp(&rhs.max_height())
        .then_with(|| lhs.x.cmp(&rhs.x))
        .then_with(|| lhs.y.cmp(&rhs.y))
        .then_with(|| lhs.z.cmp(&rhs.z))
}

/// Positive root z of `xyz² + xy(x+y)z - a = 0`, when it is rational.
///
/// The discriminant is `(xy(x+y))² + 4xya`; a solution exists iff it is a
/// rational square, and then `z = (-xy(x+y) + sqrt(D)) / (2xy)`.
pub fn solve_z(a: &ExactRational, x: &ExactRational, y: &ExactRational) -> Option<ExactRational> {
    let xy = x * y;
    let b = &xy * &(x + y);
    let d = &b * &b + ExactRational::from_integer(BigInt::from(4)) * &xy * a;
    let root = rat_sqrt(&d).ok()?;
    let z = (root - b) / (ExactRational::from_integer(BigInt::from(2)) * xy);
    z.is_positive().then_some(z)
}

/// Reduced positive fractions with max(numerator, denominator) <= height,
/// generated by walking the Stern-Brocot tree (no gcd filtering needed).
pub fn bounded_height_fractions(height: u32) -> Vec<(u32, u32)> {
    fn walk(left: (u32, u32), right: (u32, u32), height: u32, out: &mut Vec<(u32, u32)>) {
        let mid = (left.0 + right.0, left.1 + right.1);
        if mid.0.max(mid.1) > height {
            return;
        }
        walk(left, mid, height, out);
        out.push(mid);
        walk(mid, right, height, out);
    }
    let mut out = Vec::new();
    walk((0, 1), (1, 0), height, &mut out);
    out
}

/// Discriminant-is-square rejection test in integer arithmetic.
///
/// With x = p1/q1, y = p2/q2 reduced of height <= 3000 and a <= 10^6
/// (asserted by the caller), every quantity below fits in u128.
/// D = N/(q1·q2)^6 with square denominator, so D is a rational square iff
/// N is a perfect square.
fn solve_z_fast(a: u32, x: (u32, u32), y: (u32, u32)) -> Option<(u128, u128)> {
    let t1 = u128::from(x.0) * u128::from(y.0);
    let t2 = u128::from(x.0) * u128::from(y.1) + u128::from(x.1) * u128::from(y.0);
    let q = u128::from(x.1) * u128::from(y.1);
    let lead = t1 * t2;
    let n = lead * lead + 4 * u128::from(a) * t1 * q * q * q;
    let root = exact_sqrt_u128(n)?;
    if root <= lead {
        return None;
    }
    // z = (root - t1*t2) / (2*t1*q), reduced.
    let num = root - lead;
    let den = 2 * t1 * q;
    let g = gcd_u128(num, den);
    Some((num / g, den / g))
}

fn rational_from_u128(num: u128, den: u128) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

fn rational_from_pair(p: (u32, u32)) -> ExactRational {
    ExactRational::new(BigInt::from(p.0), BigInt::from(p.1))
}

/// Enumerate all canonical solutions with x and y of bounded height.
///
/// Every returned row is re-verified exactly before it is admitted.
pub fn search_solutions(cfg: &SearchConfig) -> Vec<TableRow> {
    let fractions = bounded_height_fractions(cfg.height);
    let mut rows = search_against(cfg, &fractions);
    rows.sort_by(rank_cmp);
    rows.dedup();
    rows
}

fn search_against(cfg: &SearchConfig, fractions: &[(u32, u32)]) -> Vec<TableRow> {
    // Keeps every intermediate in solve_z_fast within u128.
    assert!(
        cfg.height <= 3000 && cfg.a <= 1_000_000,
        "search bounds exceed the integer fast path (height <= 3000, a <= 10^6)"
    );
    let mut rows = Vec::new();
    for (i, &x) in fractions.iter().enumerate() {
        for &y in &fractions[..=i] {
            // x >= y by construction (the tree enumerates ascending).
            let Some((zn, zd)) = solve_z_fast(cfg.a, x, y) else {
                continue;
            };
            // Canonical ordering keeps each solution set exactly once.
            if zn * u128::from(y.1) > zd * u128::from(y.0) {
                continue;
            }
            let row = TableRow {
                a: cfg.a,
                x: rational_from_pair(x),
                y: rational_from_pair(y),
                z: rational_from_u128(zn, zd),
            };
            debug_assert_eq!(
                solve_z(
                    &ExactRational::from_integer(BigInt::from(cfg.a)),
                    &row.x,
                    &row.y
                )
                .as_ref(),
                Some(&row.z)
            );
            if row.verifies() {
                rows.push(row);
            }
        }
    }
    rows
}

/// Search a whole range of `a` values; rows come back ordered by a, then by
/// the smallness ranking, independent of how the work was scheduled.
pub fn search_range(a_values: &[u32], height: u32) -> Vec<TableRow> {
    let fractions = bounded_height_fractions(height);
    let per_a = |&a: &u32| {
        let mut rows = search_against(&SearchConfig { a, height }, &fractions);
        rows.sort_by(rank_cmp);
        rows.dedup();
        rows
    };
    #[cfg(feature = "parallel")]
    let chunks: Vec<Vec<TableRow>> = a_values.par_iter().map(per_a).collect();
    #[cfg(not(feature = "parallel"))]
    let chunks: Vec<Vec<TableRow>> = a_values.iter().map(per_a).collect();
    let mut merged: Vec<TableRow> = chunks.into_iter().flatten().collect();
    merged.sort_by(|l, r| l.a.cmp(&r.a).then_with(|| rank_cmp(l, r)));
    merged
}

/// Always-sequential variant of [`search_range`], kept available so the two
/// schedules can be compared; output is byte-identical.
pub fn search_range_seq(a_values: &[u32], height: u32) -> Vec<TableRow> {
    let fractions = bounded_height_fractions(height);
    let mut merged = Vec::new();
    for &a in a_values {
        let mut rows = search_against(&SearchConfig { a, height }, &fractions);
        rows.sort_by(rank_cmp);
        rows.dedup();
        merged.extend(rows);
    }
    merged
}

/// Outcome of verifying a table: failures list (1-based row number, reason).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TableReport {
    pub rows: usize,
    pub failures: Vec<(usize, String)>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Parse CSV text in the `a,x,y,z` schema into rows.
pub fn parse_table(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::MalformedRow {
                line: idx + 1,
                reason: format!("expected 4 fields, found {}", fields.len()),
            });
        }
        let a_value = parse_rational(fields[0]).map_err(|e| Error::MalformedRow {
            line: idx + 1,
            reason: e.to_string(),
        })?;
        if !a_value.is_integer() || !a_value.is_positive() {
            return Err(Error::MalformedRow {
                line: idx + 1,
                reason: format!("a = {} is not a positive integer", fields[0]),
            });
        }
        let mut parts = Vec::with_capacity(3);
        for field in &fields[1..] {
            parts.push(parse_rational(field).map_err(|e| Error::MalformedRow {
                line: idx + 1,
                reason: e.to_string(),
            })?);
        }
        let a_int = a_value.to_integer();
        let a = u32::try_from(a_int.clone()).map_err(|_| Error::MalformedRow {
            line: idx + 1,
            reason: format!("a = {a_int} out of range"),
        })?;
        rows.push(TableRow {
            a,
            x: parts[0].clone(),
            y: parts[1].clone(),
            z: parts[2].clone(),
        });
    }
    Ok(rows)
}

/// Check every row exactly; the report lists failures by row number.
pub fn verify_table(rows: &[TableRow]) -> TableReport {
    let mut report = TableReport {
        rows: rows.len(),
        failures: Vec::new(),
    };
    for (idx, row) in rows.iter().enumerate() {
        if !row.verifies() {
            let value = &row.x * &row.y * &row.z * (&row.x + &row.y + &row.z);
            report.failures.push((
                idx + 1,
                format!("x*y*z*(x+y+z) = {value} but a = {}", row.a),
            ));
        }
    }
    report
}

/// The bundled table, parsed.
pub fn bundled_table() -> Vec<TableRow> {
    parse_table(TABLE1_CSV).expect("bundled table parses")
}

/// Test oracle: enumerate x >= y >= z with all three heights bounded and
/// keep triples satisfying the equation, never solving for z.
///
/// The equation test is pure integer arithmetic:
/// `x·y·z·(x+y+z) = a  <=>  T1·zn·(T2·zd + zn·Q) = a·Q²·zd²`
/// with x = p1/q1, y = p2/q2, z = zn/zd, T1 = p1·p2, T2 = p1·q2 + p2·q1,
/// Q = q1·q2. Every factor fits easily in u128 at test-sized bounds.
pub fn enumerate_triples(a: u32, xy_height: u32, z_height: u32) -> Vec<TableRow> {
    assert!(xy_height <= 1000 && z_height <= 100_000 && a <= 1_000_000);
    let fractions = bounded_height_fractions(xy_height);
    let z_fractions = bounded_height_fractions(z_height);
    let mut rows = Vec::new();
    for (i, &x) in fractions.iter().enumerate() {
        for &y in &fractions[..=i] {
            let t1 = u128::from(x.0) * u128::from(y.0);
            let t2 = u128::from(x.0) * u128::from(y.1) + u128::from(x.1) * u128::from(y.0);
            let q = u128::from(x.1) * u128::from(y.1);
            let aq2 = u128::from(a) * q * q;
            for &z in &z_fractions {
                // Canonical ordering: z <= y.
                if u128::from(z.0) * u128::from(y.1) > u128::from(z.1) * u128::from(y.0) {
                    continue;
                }
                let (zn, zd) = (u128::from(z.0), u128::from(z.1));
                if t1 * zn * (t2 * zd + zn * q) == aq2 * zd * zd {
                    rows.push(TableRow {
                        a,
                        x: rational_from_pair(x),
                        y: rational_from_pair(y),
                        z: rational_from_pair(z),
                    });
                }
            }
        }
    }
    rows.sort_by(rank_cmp);
    rows.dedup();
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn solve_z_examples() {
        assert_eq!(
            solve_z(&rat(1), &ratio(3, 2), &ratio(4, 3)),
            Some(ratio(1, 6))
        );
        assert_eq!(solve_z(&rat(3), &rat(1), &rat(1)), Some(rat(1)));
        // D = 8 is not a square.
        assert_eq!(solve_z(&rat(1), &rat(1), &rat(1)), None);
    }

    #[test]
    fn stern_brocot_enumeration_is_complete() {
        let fractions = bounded_height_fractions(4);
        // Reduced p/q with p, q <= 4: count and reducedness.
        assert!(fractions.iter().all(|&(p, q)| {
            p >= 1 && q >= 1 && p <= 4 && q <= 4 && gcd_u128(p as u128, q as u128) == 1
        }));
        let mut sorted = fractions.clone();
        sorted.sort_by(|l, r| (l.0 * r.1).cmp(&(r.0 * l.1)));
        assert_eq!(sorted, fractions, "tree walk is ascending");
        let expected: usize = 11;
        assert_eq!(fractions.len(), expected);
        assert!(fractions.contains(&(1, 1)));
        assert!(fractions.contains(&(4, 3)));
        assert!(!fractions.contains(&(2, 4)));
    }

    #[test]
    fn search_finds_table_rows() {
        let rows = search_solutions(&SearchConfig { a: 3, height: 10 });
        assert!(rows.iter().any(|r| r.x == rat(1) && r.y == rat(1) && r.z == rat(1)));
        let rows = search_solutions(&SearchConfig { a: 48, height: 10 });
        assert!(rows.iter().any(|r| r.x == rat(2) && r.y == rat(2) && r.z == rat(2)));
        let rows = search_solutions(&SearchConfig { a: 1, height: 1 });
        assert!(rows.is_empty());
    }

    #[test]
    fn rows_are_canonical_and_verified() {
        let rows = search_solutions(&SearchConfig { a: 20, height: 12 });
        assert!(!rows.is_empty());
        for row in &rows {
            assert!(row.x >= row.y && row.y >= row.z);
            assert!(row.verifies());
        }
    }

    #[test]
    fn monotone_in_height() {
        let small = search_solutions(&SearchConfig { a: 6, height: 8 });
        let large = search_solutions(&SearchConfig { a: 6, height: 16 });
        for row in &small {
            assert!(large.contains(row));
        }
    }

    #[test]
    fn agrees_with_triple_enumeration() {
        for a in [1u32, 2, 3, 5, 8] {
            let via_solve = search_solutions(&SearchConfig { a, height: 8 });
            let z_cap = via_solve
                .iter()
                .map(|r| u32::try_from(r.max_height()).unwrap())
                .max()
                .unwrap_or(8)
                .max(8)
                * 2;
            let via_loop = enumerate_triples(a, 8, z_cap);
            let filtered: Vec<_> = via_solve
                .iter()
                .filter(|r| r.max_height() <= BigInt::from(z_cap))
                .cloned()
                .collect();
            assert_eq!(filtered, via_loop, "a = {a}");
        }
    }

    #[test]
    fn bundled_table_has_99_verified_rows() {
        let rows = bundled_table();
        assert_eq!(rows.len(), 99);
        assert_eq!(rows.first().unwrap().a, 1);
        assert_eq!(rows.last().unwrap().a, 99);
        let report = verify_table(&rows);
        assert!(report.all_pass(), "failures: {:?}", report.failures);
    }

    #[test]
    fn corrupted_rows_are_reported() {
        let mut rows = bundled_table();
        rows[0].z = ratio(1, 7);
        let report = verify_table(&rows);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].0, 1);
        // (1, 1, 1, 1) fails: the value is 3, not 1.
        let bad = TableRow {
            a: 1,
            x: rat(1),
            y: rat(1),
            z: rat(1),
        };
        assert!(!bad.verifies());
        // Row a = 2 from the table passes.
        let good = TableRow {
            a: 2,
            x: ratio(5, 2),
            y: ratio(5, 6),
            z: ratio(4, 15),
        };
        assert!(good.verifies());
    }

    #[test]
    fn malformed_csv_is_rejected() {
        assert!(matches!(
            parse_table("1,2,3"),
            Err(Error::MalformedRow { line: 1, .. })
        ));
        assert!(matches!(
            parse_table("1,1,1,1\nx,1,1,1"),
            Err(Error::MalformedRow { line: 2, .. })
        ));
        assert!(matches!(
            parse_table("3/2,1,1,1"),
            Err(Error::MalformedRow { line: 1, .. })
        ));
        assert_eq!(parse_table("").unwrap(), vec![]);
    }

    #[test]
    fn range_search_is_ordered_and_schedule_independent() {
        let values: Vec<u32> = (1..=6).collect();
        let par = search_range(&values, 10);
        let seq = search_range_seq(&values, 10);
        assert_eq!(par, seq);
        let mut sorted = par.clone();
        sorted.sort_by(|l, r| l.a.cmp(&r.a).then_with(|| rank_cmp(l, r)));
        assert_eq!(par, sorted);
    }

    #[test]
    fn a_zero_has_no_positive_solutions() {
        let rows = search_solutions(&SearchConfig { a: 0, height: 5 });
        assert!(rows.is_empty());
    }
}
