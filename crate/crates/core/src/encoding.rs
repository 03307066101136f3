//! Synthesis of a Clifford action carrying the canonical Z subspace
//! `span{(0|e_1), …, (0|e_k)}` onto the stabilizer `S̄`.
//!
//! The stabilizer is first reduced to canonical form using only real
//! generators (permutations and XORs in `GL(V)`, one `d_M`, and single-qubit
//! Hadamards); the encoder is the inverse of that reduction.

use crate::clifford::{compose, Generator, SympMatrix};
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, Echelon, SympVector};

struct Reduction {
    n: usize,
    rows: Vec<SympVector>,
    applied: SympMatrix,
}

impl Reduction {
    fn apply(&mut self, g: Generator) -> Result<()> {
        let action = g.action(self.n)?;
        self.rows = self.rows.iter().map(|r| action.apply(r)).collect::<Result<_>>()?;
        self.applied = compose(&self.applied, &action)?;
        Ok(())
    }
}

/// Returns `g` with `(0|e_i)·g` spanning `S̄` for `i < dim S̄`; `g.word()` is
/// its decomposition into generators. Requires a strictly valid code.
pub fn synthesize_encoding(code: &StabilizerCode) -> Result<SympMatrix> {
    code.require_valid(true)?;
    let n = code.n();
    let mut red = Reduction {
        n,
        rows: code.span().basis(),
        applied: SympMatrix::identity(n),
    };

    // Reduced rows with an X pivot come first; the rest have a = 0.
    let pivots: Vec<usize> = red.rows.iter().filter_map(|r| r.a().first_one()).collect();
    let r = pivots.len();

    // Move the X pivot columns to the front.
    let mut perm = BitMatrix::zeros(n, n);
    let rest = (0..n).filter(|c| !pivots.contains(c));
    for (target, source) in pivots.iter().copied().chain(rest).enumerate() {
        perm.set(source, target, true);
    }
    if perm != BitMatrix::identity(n) {
        red.apply(Generator::Gl(perm))?;
    }

    // Clear the X parts to the right of the pivots: a ↦ aT with T unitriangular.
    let mut clear = BitMatrix::identity(n);
    for i in 0..r {
        for c in red.rows[i].a().iter_ones().filter(|&c| c >= r) {
            clear.set(i, c, true);
        }
    }
    if clear != BitMatrix::identity(n) {
        red.apply(Generator::Gl(clear))?;
    }

    // Rows i < r are now (e_i | b_i). Isotropy makes b_i[j] = b_j[i] for j < r and
    // Q = 0 makes b_i[i] = 0, so one d_M clears every b_i.
    let mut m = BitMatrix::zeros(n, n);
    for i in 0..r {
        for c in red.rows[i].b().iter_ones() {
            m.set(i, c, true);
            m.set(c, i, true);
        }
    }
    if m.first_nonzero_diagonal().is_some() {
        return Err(Error::Internal("reduction produced a singular row".into()));
    }
    if m != BitMatrix::zeros(n, n) {
        red.apply(Generator::Diag(m))?;
    }

    for j in 1..=r {
        red.apply(Generator::Hadamard(j))?;
    }

    // All rows are (0 | z). Map their span onto span{e_1..e_k} with b ↦ bW^{-1},
    // where W has the reduced rows first and unit vectors for the free columns.
    let z_rows = Echelon::from_rows(n, red.rows.iter().map(|v| v.b().clone()));
    let mut w_rows: Vec<BitVec> = z_rows.rows().to_vec();
    w_rows.extend(
        (0..n)
            .filter(|c| !z_rows.pivots().contains(c))
            .map(|c| BitVec::unit(n, c)),
    );
    let w = BitMatrix::from_rows(n, w_rows)?;
    if w != BitMatrix::identity(n) {
        red.apply(Generator::Gl(w.transpose()))?;
    }

    let k = code.dim_s();
    let canonical: Vec<SympVector> = (0..k).map(|i| SympVector::z_unit(n, i)).collect();
    let encoder = red.applied.inverse()?;
    for v in &canonical {
        if !code.in_stabilizer(&encoder.apply(v)?)? {
            return Err(Error::Internal(format!("encoder image of {v} left the stabilizer")));
        }
    }
    Ok(encoder)
}
