//! Minimum-weight search over `S̄⊥` by Gray-code enumeration.
//!
//! The dual is given a basis whose first `dim S̄` rows span `S̄`. Enumerating
//! coefficient vectors in reflected Gray-code order changes one coefficient per
//! step, so each step is one row XOR and one popcount, and a vector lies in `S̄`
//! exactly when its coefficients on the complement rows are all zero.
//!
//! The index range is cut into a fixed number of contiguous chunks, each fixing
//! the top coefficient bits. Chunk minima are merged by `(weight, index)`, so
//! the report does not depend on how many workers ran the chunks.

use serde::Serialize;

use crate::code::{dual_basis_over_stabilizer, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::SympVector;

/// Largest dual dimension enumerated without an explicit budget.
pub const MAX_FULL_DIM: usize = 40;

const CHUNK_BITS: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DistanceOptions {
    /// Stop after this many nonzero vectors; the report is then marked incomplete.
    pub budget: Option<u64>,
    /// Worker threads; `None` or `Some(0)` uses the global rayon pool.
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub n: usize,
    /// Encoded qubits `n - dim S̄`.
    pub k: usize,
    pub dim_s: usize,
    pub dim_dual: usize,
    /// Minimum weight over `S̄⊥ \ {0}`.
    pub min_weight_dual: Option<usize>,
    pub witness_dual: Option<SympVector>,
    /// Minimum weight over `S̄⊥ \ S̄`; `None` when that set is empty or was not reached.
    pub min_weight_dual_minus_s: Option<usize>,
    pub witness_dual_minus_s: Option<SympVector>,
    pub vectors_scanned: u64,
    /// `false` when a budget cut the search short. The minima are then only
    /// upper bounds on the true values.
    pub complete: bool,
}

impl DistanceReport {
    /// `⌊(d - 1) / 2⌋` for the `S̄⊥ \ S̄` distance.
    pub fn correctable_weight(&self) -> Option<usize> {
        self.min_weight_dual_minus_s.map(|d| d.saturating_sub(1) / 2)
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ChunkBest {
    dual: Option<(usize, u64)>,
    dual_minus_s: Option<(usize, u64)>,
    scanned: u64,
}

fn better(cur: Option<(usize, u64)>, cand: Option<(usize, u64)>) -> Option<(usize, u64)> {
    match (cur, cand) {
        (None, c) => c,
        (c, None) => c,
        (Some(a), Some(b)) => Some(a.min(b)),
    }
}

impl ChunkBest {
    fn merge(self, other: ChunkBest) -> ChunkBest {
        ChunkBest {
            dual: better(self.dual, other.dual),
            dual_minus_s: better(self.dual_minus_s, other.dual_minus_s),
            scanned: self.scanned + other.scanned,
        }
    }
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Rows packed as one word of X bits and one word of Z bits (`n <= 63`).
struct Packed {
    rows: Vec<(u64, u64)>,
}

impl Packed {
    fn new(rows: &[SympVector]) -> Self {
        Self {
            rows: rows.iter().map(|r| (r.a().as_u64(), r.b().as_u64())).collect(),
        }
    }

    fn combination(&self, coeffs: u64) -> (u64, u64) {
        let (mut a, mut b) = (0u64, 0u64);
        let mut rest = coeffs;
        while rest != 0 {
            let r = self.rows[rest.trailing_zeros() as usize];
            a ^= r.0;
            b ^= r.1;
            rest &= rest - 1;
        }
        (a, b)
    }

    /// Scans Gray indices `start..end` (with `start >= 1`).
    fn scan(&self, start: u64, end: u64, dim_s: usize) -> ChunkBest {
        let mut best = ChunkBest::default();
        if start >= end {
            return best;
        }
        let mut g = gray(start);
        let (mut a, mut b) = self.combination(g);
        let mut best_dual = usize::MAX;
        let mut best_outside = usize::MAX;
        let mut i = start;
        loop {
            let w = (a | b).count_ones() as usize;
            if w < best_dual {
                best_dual = w;
                best.dual = Some((w, i));
            }
            if w < best_outside && (g >> dim_s) != 0 {
                best_outside = w;
                best.dual_minus_s = Some((w, i));
            }
            i += 1;
            if i == end {
                break;
            }
            let bit = i.trailing_zeros() as usize;
            g ^= 1 << bit;
            let r = self.rows[bit];
            a ^= r.0;
            b ^= r.1;
        }
        best.scanned = end - start;
        best
    }
}

fn run_chunks<F>(chunks: &[(u64, u64)], workers: Option<usize>, scan: F) -> Result<ChunkBest>
where
    F: Fn(u64, u64) -> ChunkBest + Sync,
{
    use rayon::prelude::*;
    let work = || -> Vec<ChunkBest> { chunks.par_iter().map(|&(s, e)| scan(s, e)).collect() };
    let results = match workers {
        Some(w) if w > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::Internal(format!("cannot build worker pool: {e}")))?
            .install(work),
        _ => work(),
    };
    Ok(results.into_iter().fold(ChunkBest::default(), ChunkBest::merge))
}

fn chunk_ranges(end: u64, dim: usize) -> Vec<(u64, u64)> {
    // Chunk boundaries depend only on the index range, never on the worker count.
    let bits = dim.min(CHUNK_BITS);
    let size = ((1u64 << dim) >> bits).max(1);
    let mut out = Vec::new();
    let mut s = 1u64;
    while s < end {
        let e = ((s / size) + 1) * size;
        out.push((s, e.min(end)));
        s = e.min(end);
    }
    out
}

/// Minimum symplectic weight over `S̄⊥ \ {0}` and over `S̄⊥ \ S̄`.
///
/// The witness for each minimum is the first vector attaining it in Gray-code
/// traversal order.
pub fn distance(code: &StabilizerCode, options: &DistanceOptions) -> Result<DistanceReport> {
    code.require_valid(false)?;
    let basis = dual_basis_over_stabilizer(code);
    let dim = basis.len();
    let dim_s = code.dim_s();
    if dim > 63 {
        return Err(Error::OutOfRange(format!("dual dimension {dim} cannot be enumerated")));
    }
    if dim > MAX_FULL_DIM && options.budget.is_none() {
        return Err(Error::OutOfRange(format!(
            "dual dimension {dim} exceeds {MAX_FULL_DIM}; set a scan budget"
        )));
    }
    let total = 1u64 << dim;
    let end = match options.budget {
        Some(b) => total.min(b.saturating_add(1)),
        None => total,
    };
    let chunks = chunk_ranges(end, dim);
    // dim S̄⊥ >= n, so every enumerable dual has n <= 63 and fits one word per half.
    let packed = Packed::new(&basis);
    let best = run_chunks(&chunks, options.workers, |s, e| packed.scan(s, e, dim_s))?;

    let witness = |index: u64| {
        let coeffs = gray(index);
        let mut v = SympVector::zero(code.n());
        for (bit, row) in basis.iter().enumerate() {
            if (coeffs >> bit) & 1 == 1 {
                v.xor_assign(row);
            }
        }
        v
    };
    Ok(DistanceReport {
        n: code.n(),
        k: code.encoded_qubits(),
        dim_s,
        dim_dual: dim,
        min_weight_dual: best.dual.map(|(w, _)| w),
        witness_dual: best.dual.map(|(_, i)| witness(i)),
        min_weight_dual_minus_s: best.dual_minus_s.map(|(w, _)| w),
        witness_dual_minus_s: best.dual_minus_s.map(|(_, i)| witness(i)),
        vectors_scanned: best.scanned,
        complete: end == total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{css_from_classical, quadratic_residue_code, Builtin};
    use crate::gf2::{BitMatrix, BitVec};

    /// Brute force over all `4^n` vectors, filtering by membership in `S̄⊥`.
    fn oracle(code: &StabilizerCode) -> (Option<usize>, Option<usize>) {
        let n = code.n();
        let mut best = None::<usize>;
        let mut best_out = None::<usize>;
        for bits in 1u64..(1u64 << (2 * n)) {
            let v = SympVector::from_bits(&BitVec::from_u64(2 * n, bits)).unwrap();
            if !code.in_dual(&v).unwrap() {
                continue;
            }
            let w = v.weight();
            best = Some(best.map_or(w, |b| b.min(w)));
            if !code.in_stabilizer(&v).unwrap() {
                best_out = Some(best_out.map_or(w, |b| b.min(w)));
            }
        }
        (best, best_out)
    }

    fn full(code: &StabilizerCode) -> DistanceReport {
        distance(code, &DistanceOptions::default()).unwrap()
    }

    #[test]
    fn gray_sequence() {
        let seq: Vec<u64> = (0..8).map(gray).collect();
        assert_eq!(seq, [0, 1, 3, 2, 6, 7, 5, 4]);
    }

    #[test]
    fn five_qubit_distance() {
        let code = Builtin::FiveQubit.code();
        let r = full(&code);
        assert_eq!(r.min_weight_dual, Some(3));
        assert_eq!(r.min_weight_dual_minus_s, Some(3));
        assert_eq!(r.vectors_scanned, 63);
        assert!(r.complete);
        let w = r.witness_dual.unwrap();
        assert_eq!(w.weight(), 3);
        assert!(code.in_dual(&w).unwrap());
        let w = r.witness_dual_minus_s.unwrap();
        assert_eq!(w.weight(), 3);
        assert!(!code.in_stabilizer(&w).unwrap());
    }

    #[test]
    fn agrees_with_oracle_for_small_codes() {
        let hamming = BitMatrix::from_strs(&["1000110", "0100101", "0010011", "0001111"]).unwrap();
        let codes = vec![
            Builtin::FiveQubit.code(),
            quadratic_residue_code(5).unwrap(),
            css_from_classical(&hamming, 7).unwrap(),
            StabilizerCode::new(3, vec!["110|000".parse().unwrap(), "011|000".parse().unwrap()]).unwrap(),
            StabilizerCode::new(2, vec![]).unwrap(),
        ];
        for code in codes {
            let r = full(&code);
            assert_eq!(
                (r.min_weight_dual, r.min_weight_dual_minus_s),
                oracle(&code),
                "{code:?}"
            );
            assert!(r.min_weight_dual <= r.min_weight_dual_minus_s);
        }
    }

    #[test]
    fn degenerate_code_separates_minima() {
        // Bit-flip repetition code: Z Z on adjacent qubits lies in S̄ with weight 2,
        // while the lightest logical is a single Z.
        let code = StabilizerCode::new(3, vec!["000|110".parse().unwrap(), "000|011".parse().unwrap()]).unwrap();
        let r = full(&code);
        assert_eq!(r.min_weight_dual, Some(1));
        assert_eq!(r.min_weight_dual_minus_s, Some(1));
        let shor_like = StabilizerCode::new(
            4,
            vec![
                "0000|1100".parse().unwrap(),
                "0000|0011".parse().unwrap(),
                "1111|0000".parse().unwrap(),
            ],
        )
        .unwrap();
        let r = full(&shor_like);
        assert_eq!(r.min_weight_dual, Some(2));
        assert_eq!(oracle(&shor_like), (r.min_weight_dual, r.min_weight_dual_minus_s));
    }

    #[test]
    fn hamming_css_matches_classical_distance() {
        let hamming = BitMatrix::from_strs(&["1000110", "0100101", "0010011", "0001111"]).unwrap();
        let code = css_from_classical(&hamming, 7).unwrap();
        let r = full(&code);
        assert_eq!(r.dim_dual, 8);
        assert_eq!(r.min_weight_dual_minus_s, Some(3));
    }

    #[test]
    fn budget_marks_partial_reports() {
        let code = quadratic_residue_code(13).unwrap();
        let r = distance(
            &code,
            &DistanceOptions {
                budget: Some(100),
                workers: None,
            },
        )
        .unwrap();
        assert!(!r.complete);
        assert_eq!(r.vectors_scanned, 100);
        assert!(r.min_weight_dual.unwrap() >= 5);
    }

    #[test]
    fn worker_count_does_not_change_report() {
        let code = quadratic_residue_code(13).unwrap();
        let base = distance(
            &code,
            &DistanceOptions {
                budget: None,
                workers: Some(1),
            },
        )
        .unwrap();
        for w in [2, 3, 8] {
            let r = distance(
                &code,
                &DistanceOptions {
                    budget: None,
                    workers: Some(w),
                },
            )
            .unwrap();
            assert_eq!(r, base);
        }
        assert_eq!(base.min_weight_dual, Some(5));
    }

    #[test]
    fn chunking_covers_range_once() {
        for (end, dim) in [(2u64, 1usize), (64, 6), (1 << 14, 14), (1000, 14), (1 << 20, 20)] {
            let chunks = chunk_ranges(end, dim);
            assert_eq!(chunks.first().unwrap().0, 1);
            assert_eq!(chunks.last().unwrap().1, end);
            for pair in chunks.windows(2) {
                assert_eq!(pair[0].1, pair[1].0);
            }
        }
    }

    #[test]
    fn rejects_invalid_code() {
        let code = StabilizerCode::new(1, vec!["1|0".parse().unwrap(), "0|1".parse().unwrap()]).unwrap();
        assert!(matches!(
            distance(&code, &DistanceOptions::default()),
            Err(Error::InvalidCode(_))
        ));
    }
}
