//! Frieze patterns: staggered arrays bordered by 0s and 1s in which every
//! unit diamond `b / a d / c` satisfies `a*d - b*c = 1` and all interior
//! entries are positive.
//!
//! A pattern of order `n` is determined by one southeast diagonal
//! `f_0, ..., f_{n-2}` (starting and ending with 1). Writing `f_s = (-1, s)`
//! and `g_s = (0, s)`, the companion diagonal follows the recursion
//! `g_s = (g_{s-1} f_s + 1) / f_{s-1}`, every entry is the bilinear form
//! `(r, s) = f_r g_s - g_r f_s`, and both sequences are antiperiodic:
//! `f_{s+n} = -f_s`, `g_{s+n} = -g_s`. Consequences verified here include
//! the translation periodicity `(r, s) = (r+n, s+n)`, the glide symmetry
//! `(r, s) = (s, r+n)`, the Plucker relation, the continuant expansion of
//! `(r, s)` in terms of the quiddity row `a_r = (r-1, r+1)`, and the
//! criterion for all-integer patterns: each interior `f_s` divides
//! `f_{s-1} + f_{s+1}`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// An order-`n` frieze pattern, represented by its generating diagonals.
/// Entries are computed on demand; the pattern itself is infinite.
#[derive(Clone, Debug)]
pub struct FriezePattern {
    order: usize,
    /// `f_0 .. f_{n-2}`, the generating diagonal (both ends 1).
    f_seed: Vec<ExactRational>,
    /// `g_0 .. g_n`, the companion diagonal.
    g_seed: Vec<ExactRational>,
    /// `f` and `g` over one full antiperiod `[0, 2n)`.
    f_ext: Vec<ExactRational>,
    g_ext: Vec<ExactRational>,
}

/// Build a pattern from its generating diagonal. Errors when the seed has
/// the wrong shape, contains nonpositive values, or is not realizable
/// (some interior entry of the induced pattern fails to be positive).
pub fn build_from_diagonal(seed: &[ExactRational]) -> Result<FriezePattern> {
    let len = seed.len();
    if len < 3 || !seed[0].is_one() || !seed[len - 1].is_one() {
        return Err(Error::SeedShape { len });
    }
    if let Some(index) = seed.iter().position(|x| !x.is_positive()) {
        return Err(Error::SeedNotPositive { index });
    }
    let n = len + 1;

    let mut g = Vec::with_capacity(n + 1);
    g.push(ExactRational::zero());
    g.push(ExactRational::one());
    for s in 2..n - 1 {
        let next = (&g[s - 1] * &seed[s] + ExactRational::one()) / &seed[s - 1];
        g.push(next);
    }
    g.push(ExactRational::one()); // g_{n-1}
    g.push(ExactRational::zero()); // g_n

    let mut f_ext: Vec<ExactRational> = seed.to_vec();
    f_ext.push(ExactRational::zero()); // f_{n-1}
    for k in 0..n {
        let v = -&f_ext[k];
        f_ext.push(v);
    }
    let mut g_ext: Vec<ExactRational> = g[..n].to_vec();
    for k in 0..n {
        let v = -&g_ext[k];
        g_ext.push(v);
    }

    let pattern = FriezePattern {
        order: n,
        f_seed: seed.to_vec(),
        g_seed: g,
        f_ext,
        g_ext,
    };

    // Realizability: every interior entry of the fundamental strip must be
    // positive. One period of r suffices by translation symmetry.
    for r in 0..n as i64 {
        for s in r + 1..r + n as i64 {
            let value = pattern.entry(r, s);
            if !value.is_positive() {
                return Err(Error::NotRealizable {
                    r,
                    s,
                    value: value.to_string(),
                });
            }
        }
    }
    Ok(pattern)
}

/// Convenience: build from integer diagonal entries.
pub fn build_from_integer_diagonal(seed: &[i64]) -> Result<FriezePattern> {
    let seed: Vec<ExactRational> = seed.iter().map(|&k| ExactRational::from_integer(k)).collect();
    build_from_diagonal(&seed)
}

impl FriezePattern {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn f_seed(&self) -> &[ExactRational] {
        &self.f_seed
    }

    pub fn g_seed(&self) -> &[ExactRational] {
        &self.g_seed
    }

    /// The entry `(r, s) = f_r g_s - g_r f_s`, total on all of Z^2 through
    /// the antiperiodic extension of the diagonals.
    pub fn entry(&self, r: i64, s: i64) -> ExactRational {
        let m = 2 * self.order as i64;
        let ri = r.rem_euclid(m) as usize;
        let si = s.rem_euclid(m) as usize;
        &self.f_ext[ri] * &self.g_ext[si] - &self.g_ext[ri] * &self.f_ext[si]
    }

    /// The quiddity row `a_r = (r-1, r+1)` for `r = 0 .. n-1`; the whole
    /// sequence is n-periodic.
    pub fn quiddity_row(&self) -> Vec<ExactRational> {
        (0..self.order as i64).map(|r| self.entry(r - 1, r + 1)).collect()
    }

    /// True when every entry of the fundamental window is an integer.
    pub fn is_integer(&self) -> bool {
        let n = self.order as i64;
        (0..n).all(|r| (r + 1..r + n).all(|s| self.entry(r, s).is_integer()))
    }

    /// One row of the staggered layout: entries `(r, r+m)` for
    /// `r = 0 .. count-1`. Row `m = 0` is the zero border, `m = 1` the unit
    /// border, and `m = n` the mirrored zero border.
    pub fn row(&self, m: usize, count: usize) -> Vec<ExactRational> {
        (0..count as i64).map(|r| self.entry(r, r + m as i64)).collect()
    }

    /// Render the staggered text table: rows `m = 0 ..= n`, each entry of
    /// row `m` at half-column `2r + m`, which reproduces the familiar
    /// diamond layout.
    pub fn render_staggered(&self, columns: usize) -> String {
        let n = self.order;
        let width = (0..=n)
            .flat_map(|m| self.row(m, columns))
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for m in 0..=n {
            let row = self.row(m, columns);
            let mut line = String::new();
            let total_cells = 2 * columns + n;
            for c in 0..total_cells {
                let cell = if c >= m && (c - m) % 2 == 0 && (c - m) / 2 < columns {
                    format!("{:<width$}", row[(c - m) / 2].to_string())
                } else {
                    " ".repeat(width)
                };
                line.push_str(&cell);
                line.push(' ');
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Determinant of the tridiagonal matrix with the given diagonal and unit
/// off-diagonals, by the three-term recursion `K_m = a_m K_{m-1} - K_{m-2}`.
/// The empty product is 1.
pub fn continuant(diagonal: &[ExactRational]) -> ExactRational {
    let mut prev = ExactRational::one();
    let mut cur = match diagonal.first() {
        None => return ExactRational::one(),
        Some(a) => a.clone(),
    };
    for a in &diagonal[1..] {
        let next = a * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Result of the divisibility test on an integer diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegerCriterion {
    pub holds: bool,
    /// Index `s` of the first interior entry with `f_s` not dividing
    /// `f_{s-1} + f_{s+1}`, if any.
    pub first_violation: Option<usize>,
}

/// Check that every interior `f_s` divides `f_{s-1} + f_{s+1}`. For seeds
/// framed by 1s this is equivalent to the built pattern being all-integer.
pub fn check_integer_criterion(seed: &[i64]) -> IntegerCriterion {
    for s in 1..seed.len().saturating_sub(1) {
        if seed[s] == 0 || (seed[s - 1] + seed[s + 1]) % seed[s] != 0 {
            return IntegerCriterion {
                holds: false,
                first_violation: Some(s),
            };
        }
    }
    IntegerCriterion {
        holds: true,
        first_violation: None,
    }
}

/// Halperin's five-term cycle. Given positive `u_1 .. u_5` satisfying the
/// three relations `u_r u_{r+2} = 1 + u_{r+1}` for `r = 1, 2, 3`, extending
/// by the same rule returns to the start: `u_6 = u_1` and `u_7 = u_2`.
/// The remaining two of the five cyclic relations hold automatically
/// (any three imply the rest); both facts are checked.
pub fn halperin_cycle_check(u: &[ExactRational; 5]) -> Result<bool> {
    for (index, window) in u.windows(3).enumerate() {
        if &window[0] * &window[2] != ExactRational::one() + &window[1] {
            return Err(Error::RelationViolation { index });
        }
    }
    if u.iter().any(|x| !x.is_positive()) {
        return Err(Error::NonpositiveExact {
            value: u.iter().find(|x| !x.is_positive()).unwrap().to_string(),
        });
    }
    let u6 = (ExactRational::one() + &u[4]) / &u[3];
    let u7 = (ExactRational::one() + &u6) / &u[4];
    let closes = u6 == u[0] && u7 == u[1];
    // The two relations not assumed: u_4 u_6 = 1 + u_5 wraps to
    // u_4 u_1 = 1 + u_5, and u_5 u_7 = 1 + u_6 wraps to u_5 u_2 = 1 + u_1.
    let rest = &u[3] * &u[0] == ExactRational::one() + &u[4]
        && &u[4] * &u[1] == ExactRational::one() + &u[0];
    Ok(closes && rest)
}

/// A violation found while verifying a staggered grid.
#[derive(Clone, Debug)]
pub enum GridViolation {
    /// A border entry that is not the required 0 or 1.
    Border { row: usize, col: usize, value: String },
    /// An interior entry that is not positive.
    Nonpositive { row: usize, col: usize, value: String },
    /// A diamond `a d - b c != 1`; `row`/`col` locate its left entry.
    Unimodular { row: usize, col: usize, det: String },
}

/// Outcome of verifying a staggered grid.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub order: usize,
    /// Stagger parity chosen while normalizing the rows (the text layout
    /// does not pin down which of two alignments was meant; both are tried).
    pub parity: usize,
    pub violations: Vec<GridViolation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verify a staggered grid of rationals: border rows of 0s and 1s (top and
/// mirrored bottom), positive interior, and the unimodular rule on every
/// complete diamond. Rows may be ragged; diamonds are checked where all
/// four entries exist.
pub fn verify_pattern(grid: &[Vec<ExactRational>]) -> Result<VerificationReport> {
    if grid.len() < 5 {
        return Err(Error::MalformedGrid {
            reason: format!("need at least 5 rows (order >= 4), got {}", grid.len()),
        });
    }
    if grid.iter().any(|row| row.is_empty()) {
        return Err(Error::MalformedGrid {
            reason: "empty row".to_string(),
        });
    }
    let order = grid.len() - 1;

    type BorderRule = fn(&ExactRational) -> bool;
    let border_rows: [(usize, BorderRule); 4] = [
        (0, ExactRational::is_zero),
        (1, ExactRational::is_one),
        (order - 1, ExactRational::is_one),
        (order, ExactRational::is_zero),
    ];
    let borders = |violations: &mut Vec<GridViolation>| {
        for (row, ok) in border_rows {
            for (col, value) in grid[row].iter().enumerate() {
                if !ok(value) {
                    violations.push(GridViolation::Border {
                        row,
                        col,
                        value: value.to_string(),
                    });
                }
            }
        }
        for (row, entries) in grid.iter().enumerate().take(order - 1).skip(2) {
            for (col, value) in entries.iter().enumerate() {
                if !value.is_positive() {
                    violations.push(GridViolation::Nonpositive {
                        row,
                        col,
                        value: value.to_string(),
                    });
                }
            }
        }
    };

    let diamonds = |parity: usize, violations: &mut Vec<GridViolation>| {
        for v in 0..grid.len().saturating_sub(2) {
            let mid = &grid[v + 1];
            for j in 0..mid.len().saturating_sub(1) {
                // Left and right live in row v+1; top in row v and bottom in
                // row v+2 sit over/under the gap, at j+1 or j by parity.
                let (ti, bi) = if parity == 0 { (j + 1, j) } else { (j, j + 1) };
                let (top, bottom) = match (grid[v].get(ti), grid[v + 2].get(bi)) {
                    (Some(t), Some(b)) => (t, b),
                    _ => continue,
                };
                let det = &mid[j] * &mid[j + 1] - top * bottom;
                if !det.is_one() {
                    violations.push(GridViolation::Unimodular {
                        row: v + 1,
                        col: j,
                        det: det.to_string(),
                    });
                }
            }
        }
    };

    let mut best: Option<VerificationReport> = None;
    for parity in [0usize, 1] {
        let mut violations = Vec::new();
        borders(&mut violations);
        diamonds(parity, &mut violations);
        let report = VerificationReport {
            order,
            parity,
            violations,
        };
        if best
            .as_ref()
            .is_none_or(|b| report.violations.len() < b.violations.len())
        {
            best = Some(report);
        }
    }
    Ok(best.expect("two parities were tried"))
}

/// Parse a whitespace-separated staggered grid, one pattern row per line.
pub fn parse_staggered_grid(text: &str) -> Result<Vec<Vec<ExactRational>>> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(ExactRational::parse)
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// Draw a random integer diagonal that satisfies the divisibility criterion:
/// juxtapose blocks grown by the extension rule `f_{s+1} = m f_s - f_{s-1}`
/// with `m > f_{s-1} / f_s`, retrying until the walk returns to 1 within the
/// length budget and the seed is realizable.
pub fn random_integer_seed<R: Rng>(rng: &mut R, max_len: usize) -> Vec<i64> {
    let max_len = max_len.max(4);
    'attempt: for _ in 0..1_000 {
        let blocks = if rng.gen_bool(0.3) { 2 } else { 1 };
        let mut seed: Vec<i64> = vec![1];
        for _ in 0..blocks {
            let mut prev = 1i64;
            let mut last = 1 + rng.gen_range(0..3);
            seed.push(last);
            loop {
                if seed.len() >= max_len {
                    continue 'attempt;
                }
                if last == 1 && seed.len() >= 3 && rng.gen_bool(0.5) {
                    break;
                }
                let m_min = prev / last + 1;
                let m = if rng.gen_bool(0.3) { m_min + 1 } else { m_min };
                let next = m * last - prev;
                seed.push(next);
                prev = last;
                last = next;
                if last == 1 && seed.len() >= 4 {
                    break;
                }
            }
        }
        if *seed.last().unwrap() != 1 || seed.len() < 3 {
            continue;
        }
        if !check_integer_criterion(&seed).holds {
            continue;
        }
        if build_from_integer_diagonal(&seed).is_ok() {
            return seed;
        }
    }
    vec![1, 1, 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(k: i64) -> ExactRational {
        ExactRational::from_integer(k)
    }

    fn ints(row: &[ExactRational]) -> Vec<i64> {
        row.iter()
            .map(|x| {
                assert!(x.is_integer(), "{x} is not an integer");
                x.to_f64() as i64
            })
            .collect()
    }

    fn cyclically_equal(a: &[i64], b: &[i64]) -> bool {
        a.len() == b.len()
            && (0..a.len()).any(|k| (0..a.len()).all(|j| a[(k + j) % a.len()] == b[j]))
    }

    /// The order-7 pattern: diagonal 1,1,1,1,2,1.
    fn order7() -> FriezePattern {
        build_from_integer_diagonal(&[1, 1, 1, 1, 2, 1]).unwrap()
    }

    #[test]
    fn order7_pattern_rows() {
        let p = order7();
        assert_eq!(p.order(), 7);
        assert!(ints(&p.row(0, 7)).iter().all(|&x| x == 0));
        assert!(ints(&p.row(1, 7)).iter().all(|&x| x == 1));
        assert!(cyclically_equal(&ints(&p.row(2, 7)), &[1, 2, 2, 3, 1, 2, 4]));
        assert!(cyclically_equal(&ints(&p.row(3, 7)), &[1, 3, 5, 2, 1, 7, 3]));
        // Glide symmetry makes rows 4 and 5 shifts of rows 3 and 2.
        assert!(cyclically_equal(&ints(&p.row(4, 7)), &[1, 3, 5, 2, 1, 7, 3]));
        assert!(cyclically_equal(&ints(&p.row(5, 7)), &[1, 2, 2, 3, 1, 2, 4]));
        assert!(ints(&p.row(6, 7)).iter().all(|&x| x == 1));
        assert!(ints(&p.row(7, 7)).iter().all(|&x| x == 0));
    }

    #[test]
    fn f_sequence_antiperiodicity() {
        let p = order7();
        // f over one antiperiod: 1,1,1,1,2,1,0 then negated.
        let f: Vec<i64> = (-1i64..15).map(|s| {
            let e = p.entry(-1, s);
            assert!(e.is_integer());
            e.to_f64() as i64
        }).collect();
        assert_eq!(&f[..8], &[0, 1, 1, 1, 1, 2, 1, 0]);
        assert_eq!(&f[8..15], &[-1, -1, -1, -1, -2, -1, 0]);
    }

    #[test]
    fn border_values() {
        let p = order7();
        let n = 7i64;
        for r in -5i64..12 {
            assert!(p.entry(r, r).is_zero());
            assert!(p.entry(r, r + n).is_zero());
            assert!(p.entry(r, r + 1).is_one());
            assert!(p.entry(r + 1, r + n).is_one());
            assert_eq!(p.entry(r, r - 1), -ExactRational::one());
            assert_eq!(p.entry(r - 1, r + n), -ExactRational::one());
        }
    }

    #[test]
    fn unimodular_rule_everywhere() {
        let p = order7();
        for r in -7i64..14 {
            for s in r + 1..r + 8 {
                let det = p.entry(r - 1, s) * p.entry(r, s + 1)
                    - p.entry(r, s) * p.entry(r - 1, s + 1);
                assert!(det.is_one(), "rule fails at ({r}, {s})");
            }
        }
    }

    #[test]
    fn periodicity_and_glide_symmetry() {
        for seed in [vec![1, 1, 1, 1, 2, 1], vec![1, 2, 5, 3, 1, 1, 2, 3, 4, 1]] {
            let p = build_from_integer_diagonal(&seed).unwrap();
            let n = p.order() as i64;
            for r in -n..2 * n {
                for s in r + 1..r + n {
                    assert_eq!(p.entry(r, s), p.entry(r + n, s + n));
                    assert_eq!(p.entry(r, s), p.entry(s, r + n));
                    assert_eq!(p.entry(s, r), -p.entry(r, s));
                }
            }
            let quiddity = p.quiddity_row();
            for (k, a) in quiddity.iter().enumerate() {
                assert_eq!(*a, p.entry(k as i64 - 1 + n, k as i64 + 1 + n));
            }
        }
    }

    #[test]
    fn plucker_relation_on_random_quadruples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let p = order7();
        for _ in 0..1000 {
            let mut idx = || rng.gen_range(-20i64..20);
            let (r, s, t, u) = (idx(), idx(), idx(), idx());
            let lhs = p.entry(r, s) * p.entry(t, u)
                + p.entry(r, t) * p.entry(u, s)
                + p.entry(r, u) * p.entry(s, t);
            assert!(lhs.is_zero(), "Plucker fails at ({r},{s},{t},{u})");
        }
    }

    #[test]
    fn quiddity_row_and_continuants() {
        let p = order7();
        assert_eq!(ints(&p.quiddity_row()), vec![1, 2, 2, 3, 1, 2, 4]);
        // (r, s) is the tridiagonal determinant over a_{r+1} .. a_{s-1}.
        for r in 0..7i64 {
            for s in r + 2..r + 7 {
                let diag: Vec<ExactRational> =
                    (r + 1..s).map(|t| p.entry(t - 1, t + 1)).collect();
                assert_eq!(continuant(&diag), p.entry(r, s));
            }
            // The closure determinant over n-2 quiddity entries equals 1.
            let diag: Vec<ExactRational> = (r..r + 5).map(|t| p.entry(t - 1, t + 1)).collect();
            assert!(continuant(&diag).is_one());
        }
    }

    #[test]
    fn continuant_small_cases() {
        assert!(continuant(&[]).is_one());
        assert_eq!(continuant(&[r(5)]), r(5));
        assert_eq!(continuant(&[r(2), r(2), r(2)]), r(4));
    }

    #[test]
    fn integer_criterion_examples() {
        assert!(check_integer_criterion(&[1, 2, 5, 3, 1]).holds);
        assert!(check_integer_criterion(&[1, 2, 3, 4, 1]).holds);
        let bad = check_integer_criterion(&[1, 3, 1]);
        assert!(!bad.holds);
        assert_eq!(bad.first_violation, Some(1));
    }

    #[test]
    fn integer_seed_builds_integer_pattern() {
        for seed in [
            vec![1, 2, 5, 3, 1, 1, 2, 3, 4, 1],
            vec![1, 2, 5, 3, 1, 2, 3, 4, 1],
            vec![1, 1, 2, 3, 1, 1],
        ] {
            assert!(check_integer_criterion(&seed).holds);
            let p = build_from_integer_diagonal(&seed).unwrap();
            assert!(p.is_integer());
            // Round-trip: the diagonal reads back exactly.
            let back: Vec<ExactRational> =
                (0..p.order() as i64 - 1).map(|s| p.entry(-1, s)).collect();
            assert_eq!(back.as_slice(), p.f_seed());
        }
    }

    #[test]
    fn all_ones_seed_is_the_fan_pattern() {
        // Realizable at every order; g grows linearly, entries are s - r
        // away from the borders.
        for n in 4..=12 {
            let seed = vec![1i64; n - 1];
            let p = build_from_integer_diagonal(&seed).unwrap();
            assert!(p.is_integer());
        }
    }

    #[test]
    fn coprime_neighbors_in_integer_patterns() {
        fn gcd(a: i64, b: i64) -> i64 {
            let (mut a, mut b) = (a.abs(), b.abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        }
        let p = build_from_integer_diagonal(&[1, 2, 5, 3, 1, 2, 3, 4, 1]).unwrap();
        let n = p.order() as i64;
        for r in 0..n {
            for s in r + 2..r + n - 1 {
                let e = ints(&[p.entry(r, s)])[0];
                for (dr, ds) in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
                    let nb = ints(&[p.entry(r + dr, s + ds)])[0];
                    assert_eq!(gcd(e, nb), 1, "entries ({r},{s}) and neighbor");
                }
            }
        }
    }

    #[test]
    fn rational_seeds_are_supported() {
        // Order 5: any positive u gives a valid (generally non-integer)
        // pattern with relations u_r u_{r+2} = 1 + u_{r+1}.
        let u = ExactRational::new(7, 3).unwrap();
        let seed = [ExactRational::one(), u.clone(), ExactRational::one()];
        let p = build_from_diagonal(&seed).unwrap();
        assert_eq!(p.order(), 4);
        assert!(!p.is_integer());
    }

    #[test]
    fn order5_relations_and_period() {
        // Every order-5 seed [1, u, w, 1] with u, w > 0 is realizable, and
        // its quiddity row is a five-term cycle: reading it in steps of 3
        // (u_k = a_{3k mod 5}) gives u_k u_{k+2} = 1 + u_{k+1}, i.e. the
        // relations a_r a_{r+1} = 1 + a_{r+3} hold cyclically.
        for (u, w) in [(r(1), r(2)), (r(2), r(2)), (ExactRational::new(5, 2).unwrap(), r(7))] {
            let seed = [ExactRational::one(), u, w, ExactRational::one()];
            let p = build_from_diagonal(&seed).unwrap();
            let a = p.quiddity_row();
            for k in 0..5usize {
                let lhs = &a[k] * &a[(k + 1) % 5];
                let rhs = ExactRational::one() + &a[(k + 3) % 5];
                assert_eq!(lhs, rhs);
            }
            let reindexed: Vec<ExactRational> =
                (0..5).map(|k| a[(3 * k) % 5].clone()).collect();
            assert!(halperin_cycle_check(&[
                reindexed[0].clone(),
                reindexed[1].clone(),
                reindexed[2].clone(),
                reindexed[3].clone(),
                reindexed[4].clone(),
            ])
            .unwrap());
            // Period 5 in both indices.
            for k in 0..5i64 {
                assert_eq!(p.entry(k, k + 2), p.entry(k + 5, k + 7));
            }
        }
    }

    #[test]
    fn build_rejects_bad_seeds() {
        assert!(matches!(
            build_from_integer_diagonal(&[1, 1]),
            Err(Error::SeedShape { .. })
        ));
        assert!(matches!(
            build_from_integer_diagonal(&[2, 1, 1]),
            Err(Error::SeedShape { .. })
        ));
        assert!(matches!(
            build_from_integer_diagonal(&[1, -2, 1]),
            Err(Error::SeedNotPositive { .. })
        ));
    }

    #[test]
    fn positive_seeds_are_always_realizable() {
        // The g-recursion pins the Wronskian f_{s-1} g_s - g_{s-1} f_s to 1,
        // so g_s / f_s increases strictly and every interior entry
        // f_r f_s (g_s/f_s - g_r/f_r) is positive: any positive diagonal
        // framed by 1s builds. Seeds that fail the integer criterion
        // (like 1,3,1: 3 does not divide 1+1) build rational patterns.
        let p = build_from_integer_diagonal(&[1, 3, 1]).unwrap();
        assert!(!check_integer_criterion(&[1, 3, 1]).holds);
        assert!(!p.is_integer());

        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let len = rng.gen_range(3..9);
            let mut seed = vec![ExactRational::one()];
            for _ in 0..len - 2 {
                seed.push(ExactRational::new(rng.gen_range(1..40), rng.gen_range(1..40)).unwrap());
            }
            seed.push(ExactRational::one());
            build_from_diagonal(&seed).unwrap();
        }
    }

    #[test]
    fn halperin_examples() {
        let u = [r(1), r(1), r(2), r(3), r(2)];
        assert!(halperin_cycle_check(&u).unwrap());

        // Any Lyness 5-cycle x, y, (1+y)/x, (1+x+y)/(xy), (1+x)/y.
        let (x, y) = (ExactRational::new(3, 2).unwrap(), ExactRational::new(7, 5).unwrap());
        let one = ExactRational::one();
        let u = [
            x.clone(),
            y.clone(),
            (&one + &y) / &x,
            (&one + &x + &y) / (&x * &y),
            (&one + &x) / &y,
        ];
        assert!(halperin_cycle_check(&u).unwrap());

        // Symmetric seed u1 = u2.
        let s = r(2);
        let u = [
            s.clone(),
            s.clone(),
            (&one + &s) / &s,
            (&one + &s + &s) / (&s * &s),
            (&one + &s) / &s,
        ];
        assert!(halperin_cycle_check(&u).unwrap());

        let bad = [r(1), r(1), r(3), r(3), r(2)];
        assert!(matches!(
            halperin_cycle_check(&bad),
            Err(Error::RelationViolation { .. })
        ));
    }

    #[test]
    fn verify_accepts_rendered_patterns() {
        for seed in [vec![1i64, 1, 1, 1, 2, 1], vec![1, 2, 5, 3, 1, 2, 3, 4, 1]] {
            let p = build_from_integer_diagonal(&seed).unwrap();
            let text = p.render_staggered(2 * p.order());
            let grid = parse_staggered_grid(&text).unwrap();
            let report = verify_pattern(&grid).unwrap();
            assert!(report.is_valid(), "violations: {:?}", report.violations);
            assert_eq!(report.order, p.order());
        }
    }

    #[test]
    fn verify_flags_a_corrupted_entry() {
        let p = order7();
        let mut grid = parse_staggered_grid(&p.render_staggered(14)).unwrap();
        // Bump one interior entry; exactly the adjacent diamonds break.
        grid[3][5] = &grid[3][5] + &ExactRational::one();
        let report = verify_pattern(&grid).unwrap();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, GridViolation::Unimodular { .. })));
        let count = report.violations.len();
        assert!((1..=4).contains(&count), "expected local violations, got {count}");
    }

    #[test]
    fn verify_rejects_malformed_grids() {
        assert!(verify_pattern(&[vec![ExactRational::zero()]]).is_err());
        let text = "0 0 0\n1 1 1\n";
        let grid = parse_staggered_grid(text).unwrap();
        assert!(verify_pattern(&grid).is_err());
    }

    #[test]
    fn random_seeds_satisfy_criterion_and_build() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(123);
        for _ in 0..50 {
            let seed = random_integer_seed(&mut rng, 12);
            assert_eq!(*seed.first().unwrap(), 1);
            assert_eq!(*seed.last().unwrap(), 1);
            assert!(check_integer_criterion(&seed).holds);
            let p = build_from_integer_diagonal(&seed).unwrap();
            assert!(p.is_integer());
            // Converse direction: the diagonal of an integer pattern
            // satisfies the criterion (it is the seed itself).
            let back: Vec<i64> = ints(p.f_seed());
            assert!(check_integer_criterion(&back).holds);
        }
    }
}
