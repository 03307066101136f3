//! Induced actions of Clifford generators on the symplectic space.
//!
//! A [`SympMatrix`] is a `2n × 2n` binary matrix acting on row vectors `(a|b)`
//! by right multiplication, so `compose(g1, g2)` applies `g1` first. Only the
//! action on vectors is tracked here; the signs picked up under conjugation live
//! in the dense representations of `statevector`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, SympVector};

/// Which Clifford group a matrix is known to come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliffordKind {
    /// Induced by the real group `L`; preserves both the alternating form and `Q`.
    Real,
    /// Induced by the complex group `L'`; preserves the alternating form.
    Complex,
}

/// One generator of `L` or `L'`. Qubit indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// The full Hadamard `H`, swapping `X(b)` and `Z(b)`.
    HadamardAll,
    /// A one-qubit Hadamard on qubit `j`, swapping `a_j` and `b_j`.
    Hadamard(usize),
    /// The permutation `|v⟩ → |vA⟩` for invertible `A`.
    Gl(BitMatrix),
    /// The real diagonal `d_M` for symmetric `M` with zero diagonal.
    Diag(BitMatrix),
    /// The complex diagonal `d_P` for symmetric `P`.
    DiagComplex(BitMatrix),
}

impl Generator {
    pub fn kind(&self) -> CliffordKind {
        match self {
            Generator::DiagComplex(_) => CliffordKind::Complex,
            _ => CliffordKind::Real,
        }
    }

    /// Number of qubits the generator is defined on, when it is fixed by its data.
    pub fn qubits(&self) -> Option<usize> {
        match self {
            Generator::HadamardAll | Generator::Hadamard(_) => None,
            Generator::Gl(m) | Generator::Diag(m) | Generator::DiagComplex(m) => Some(m.col_count()),
        }
    }

    pub fn action(&self, n: usize) -> Result<SympMatrix> {
        if let Some(q) = self.qubits() {
            if q != n {
                return Err(Error::dim(n, q));
            }
        }
        match self {
            Generator::HadamardAll => Ok(hadamard_all(n)),
            Generator::Hadamard(j) => hadamard_single(n, *j),
            Generator::Gl(a) => gl_action(a),
            Generator::Diag(m) => diag_action(m),
            Generator::DiagComplex(p) => diag_action_complex(p),
        }
    }

    pub fn inverse(&self) -> Result<Generator> {
        Ok(match self {
            Generator::Gl(a) => Generator::Gl(a.inverse()?),
            // Hadamards and the diagonal actions are involutions on the symplectic space.
            other => other.clone(),
        })
    }
}

fn rows_text(m: &BitMatrix) -> String {
    m.rows().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::HadamardAll => f.write_str("H_ALL"),
            Generator::Hadamard(j) => write!(f, "H {j}"),
            Generator::Gl(m) => write!(f, "GL {}", rows_text(m)),
            Generator::Diag(m) => write!(f, "DM {}", rows_text(m)),
            Generator::DiagComplex(m) => write!(f, "DP {}", rows_text(m)),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let mut parts = s.split_whitespace();
        let head = parts.next().ok_or_else(|| err("empty generator".into()))?;
        let rest: Vec<&str> = parts.collect();
        let matrix = |rest: &[&str]| -> Result<BitMatrix> {
            let m = BitMatrix::from_strs(rest)?;
            if !m.is_square() || m.row_count() == 0 {
                return Err(err(format!(
                    "expected a nonempty square matrix, got {} rows",
                    m.row_count()
                )));
            }
            Ok(m)
        };
        match head {
            "H_ALL" if rest.is_empty() => Ok(Generator::HadamardAll),
            "H" if rest.len() == 1 => rest[0]
                .parse()
                .map(Generator::Hadamard)
                .map_err(|_| err(format!("invalid qubit index {:?}", rest[0]))),
            "GL" => Ok(Generator::Gl(matrix(&rest)?)),
            "DM" => Ok(Generator::Diag(matrix(&rest)?)),
            "DP" => Ok(Generator::DiagComplex(matrix(&rest)?)),
            other => Err(err(format!("unknown generator {other:?}"))),
        }
    }
}

/// A binary `2n × 2n` matrix acting on `(a|b)` by right multiplication, with the
/// generator word it was built from.
#[derive(Clone, PartialEq, Eq)]
pub struct SympMatrix {
    n: usize,
    m: BitMatrix,
    kind: CliffordKind,
    word: Vec<Generator>,
}

impl SympMatrix {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            m: BitMatrix::identity(2 * n),
            kind: CliffordKind::Real,
            word: Vec::new(),
        }
    }

    /// Wraps a raw matrix without a generator word. `kind` is taken on trust.
    pub fn from_matrix(n: usize, m: BitMatrix, kind: CliffordKind) -> Result<Self> {
        if m.row_count() != 2 * n || m.col_count() != 2 * n {
            return Err(Error::dim(2 * n, m.row_count().max(m.col_count())));
        }
        Ok(Self {
            n,
            m,
            kind,
            word: Vec::new(),
        })
    }

    fn generated(n: usize, m: BitMatrix, g: Generator) -> Self {
        Self {
            n,
            m,
            kind: g.kind(),
            word: vec![g],
        }
    }

    /// Rebuilds a matrix from a word by composing its generators left to right.
    pub fn from_word(n: usize, word: &[Generator]) -> Result<Self> {
        word.iter()
            .try_fold(Self::identity(n), |acc, g| compose(&acc, &g.action(n)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.m
    }

    pub fn kind(&self) -> CliffordKind {
        self.kind
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.m == BitMatrix::identity(2 * self.n)
    }

    /// `v · m`.
    pub fn apply(&self, v: &SympVector) -> Result<SympVector> {
        if v.n() != self.n {
            return Err(Error::dim(self.n, v.n()));
        }
        SympVector::from_bits(&self.m.left_mul(&v.to_bits()))
    }

    pub fn inverse(&self) -> Result<SympMatrix> {
        let word = self
            .word
            .iter()
            .rev()
            .map(Generator::inverse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n: self.n,
            m: self.m.inverse()?,
            kind: self.kind,
            word,
        })
    }

    /// `m J mᵀ == J`, where `J` swaps the a and b halves.
    pub fn preserves_form(&self) -> bool {
        let j = gram_matrix(self.n);
        let mj = self.m.mul(&j).expect("square");
        mj.mul(&self.m.transpose()).expect("square") == j
    }

    /// `mᵀ J m == J`.
    pub fn preserves_form_transposed(&self) -> bool {
        let j = gram_matrix(self.n);
        let tj = self.m.transpose().mul(&j).expect("square");
        tj.mul(&self.m).expect("square") == j
    }

    /// First vector among the basis vectors and their pairwise sums on which `Q`
    /// changes. By polarization this set decides preservation of `Q` everywhere.
    pub fn quadratic_witness(&self) -> Option<SympVector> {
        let basis: Vec<SympVector> = (0..2 * self.n)
            .map(|i| SympVector::from_bits(&BitVec::unit(2 * self.n, i)).expect("even"))
            .collect();
        let changes = |v: &SympVector| {
            let image = self.apply(v).expect("same n");
            image.quadratic_form() != v.quadratic_form()
        };
        if let Some(v) = basis.iter().find(|v| changes(v)) {
            return Some(v.clone());
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let v = basis[i].xor(&basis[j]);
                if changes(&v) {
                    return Some(v);
                }
            }
        }
        None
    }

    pub fn preserves_quadratic(&self) -> bool {
        self.quadratic_witness().is_none()
    }

    /// Exhaustive check of `Q(v·m) == Q(v)` over all `4^n` vectors; returns the first failure.
    pub fn quadratic_witness_exhaustive(&self) -> Result<Option<SympVector>> {
        if self.n > 12 {
            return Err(Error::TooLarge { n: self.n, max: 12 });
        }
        for bits in 0u64..(1u64 << (2 * self.n)) {
            let v = SympVector::from_bits(&BitVec::from_u64(2 * self.n, bits))?;
            if self.apply(&v)?.quadratic_form() != v.quadratic_form() {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// Exhaustive check of `(u·m, v·m) == (u, v)` over all pairs; returns the first failure.
    pub fn form_witness_exhaustive(&self) -> Result<Option<(SympVector, SympVector)>> {
        if self.n > 6 {
            return Err(Error::TooLarge { n: self.n, max: 6 });
        }
        let all: Vec<SympVector> = (0u64..(1u64 << (2 * self.n)))
            .map(|bits| SympVector::from_bits(&BitVec::from_u64(2 * self.n, bits)))
            .collect::<Result<_>>()?;
        let images: Vec<SympVector> = all.iter().map(|v| self.apply(v)).collect::<Result<_>>()?;
        for (u, iu) in all.iter().zip(&images) {
            for (v, iv) in all.iter().zip(&images) {
                if u.sp(v) != iu.sp(iv) {
                    return Ok(Some((u.clone(), v.clone())));
                }
            }
        }
        Ok(None)
    }

    /// One word entry per line, the format read back by [`parse_word`].
    pub fn word_text(&self) -> String {
        self.word.iter().map(|g| format!("{g}\n")).collect()
    }
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.rows().iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let s = row.to_string();
            write!(f, "{}|{}", &s[..self.n], &s[self.n..])?;
        }
        Ok(())
    }
}

impl fmt::Debug for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SympMatrix(n={}, {:?}, word={:?}, {:?})",
            self.n, self.kind, self.word, self.m
        )
    }
}

/// Parses a word, one generator per line. Blank lines and `#` comments are skipped.
pub fn parse_word(text: &str) -> Result<Vec<Generator>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i, line))
        })
        .map(|(i, line)| {
            line.parse().map_err(|e| match e {
                Error::Parse { column, message, .. } => Error::Parse {
                    line: i + 1,
                    column,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

/// Gram matrix `J = [[0, I], [I, 0]]` of the alternating form.
pub fn gram_matrix(n: usize) -> BitMatrix {
    let mut j = BitMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, n + i, true);
        j.set(n + i, i, true);
    }
    j
}

/// `(a|b) ↦ (b|a)`.
pub fn hadamard_all(n: usize) -> SympMatrix {
    SympMatrix::generated(n, gram_matrix(n), Generator::HadamardAll)
}

/// Swaps `a_j` and `b_j` for the 1-based qubit index `j`.
pub fn hadamard_single(n: usize, j: usize) -> Result<SympMatrix> {
    if j == 0 || j > n {
        return Err(Error::OutOfRange(format!("qubit index {j} not in 1..={n}")));
    }
    let q = j - 1;
    let mut m = BitMatrix::identity(2 * n);
    m.set(q, q, false);
    m.set(n + q, n + q, false);
    m.set(q, n + q, true);
    m.set(n + q, q, true);
    Ok(SympMatrix::generated(n, m, Generator::Hadamard(j)))
}

/// `(a|b) ↦ (aA | bA^{-T})`.
pub fn gl_action(a: &BitMatrix) -> Result<SympMatrix> {
    if !a.is_square() {
        return Err(Error::dim(a.col_count(), a.row_count()));
    }
    let n = a.col_count();
    let inv_t = a.inverse()?.transpose();
    let mut m = BitMatrix::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, a.get(r, c));
            m.set(n + r, n + c, inv_t.get(r, c));
        }
    }
    Ok(SympMatrix::generated(n, m, Generator::Gl(a.clone())))
}

fn upper_block(p: &BitMatrix) -> BitMatrix {
    let n = p.col_count();
    let mut m = BitMatrix::identity(2 * n);
    for r in 0..n {
        for c in p.row(r).iter_ones() {
            m.set(r, n + c, true);
        }
    }
    m
}

/// `(a|b) ↦ (a | aM + b)` for symmetric `M` with zero diagonal.
pub fn diag_action(m: &BitMatrix) -> Result<SympMatrix> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if let Some(i) = m.first_nonzero_diagonal() {
        return Err(Error::NonzeroDiagonal(i));
    }
    Ok(SympMatrix::generated(
        m.col_count(),
        upper_block(m),
        Generator::Diag(m.clone()),
    ))
}

/// `(a|b) ↦ (a | aP + b)` for symmetric `P`; tagged complex.
pub fn diag_action_complex(p: &BitMatrix) -> Result<SympMatrix> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(SympMatrix::generated(
        p.col_count(),
        upper_block(p),
        Generator::DiagComplex(p.clone()),
    ))
}

/// Applies `g1` then `g2`: the matrix product `g1 · g2` with concatenated words.
pub fn compose(g1: &SympMatrix, g2: &SympMatrix) -> Result<SympMatrix> {
    if g1.n != g2.n {
        return Err(Error::dim(g1.n, g2.n));
    }
    let kind = if g1.kind == CliffordKind::Real && g2.kind == CliffordKind::Real {
        CliffordKind::Real
    } else {
        CliffordKind::Complex
    };
    Ok(SympMatrix {
        n: g1.n,
        m: g1.m.mul(&g2.m)?,
        kind,
        word: g1.word.iter().chain(&g2.word).cloned().collect(),
    })
}

/// Outcome of one entry of [`form_preservation_suite`].
#[derive(Clone, Debug)]
pub struct GeneratorCheck {
    pub generator: Generator,
    pub preserves_form: bool,
    /// First vector whose `Q` value changes, if any.
    pub quadratic_witness: Option<SympVector>,
}

impl GeneratorCheck {
    /// Real generators must preserve both forms; complex ones only the alternating form.
    pub fn passed(&self) -> bool {
        match self.generator.kind() {
            CliffordKind::Real => self.preserves_form && self.quadratic_witness.is_none(),
            CliffordKind::Complex => self.preserves_form,
        }
    }
}

/// A representative set of generators on `n` qubits: the full and single-qubit
/// Hadamards, the elementary XOR and the cyclic shift in `GL(V)`, every
/// elementary `d_M`, and the complex diagonals `d_P` for `P = I` and `P = E_11`.
pub fn representative_generators(n: usize) -> Vec<Generator> {
    let mut gens = vec![Generator::HadamardAll];
    gens.extend((1..=n).map(Generator::Hadamard));
    if n >= 2 {
        let mut xor = BitMatrix::identity(n);
        xor.set(0, 1, true);
        gens.push(Generator::Gl(xor));
        let mut shift = BitMatrix::zeros(n, n);
        for i in 0..n {
            shift.set(i, (i + 1) % n, true);
        }
        gens.push(Generator::Gl(shift));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut m = BitMatrix::zeros(n, n);
            m.set(i, j, true);
            m.set(j, i, true);
            gens.push(Generator::Diag(m));
        }
    }
    gens.push(Generator::DiagComplex(BitMatrix::identity(n)));
    let mut e11 = BitMatrix::zeros(n, n);
    e11.set(0, 0, true);
    gens.push(Generator::DiagComplex(e11));
    gens
}

/// Checks every representative generator for preservation of the alternating
/// form and of `Q`, exhaustively over all `4^n` vectors when `n <= 6`.
pub fn form_preservation_suite(n: usize) -> Result<Vec<GeneratorCheck>> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    representative_generators(n)
        .into_iter()
        .map(|g| {
            let action = g.action(n)?;
            let quadratic_witness = if n <= 6 {
                action.quadratic_witness_exhaustive()?
            } else {
                action.quadratic_witness()
            };
            let preserves_form = if n <= 4 {
                action.form_witness_exhaustive()?.is_none() && action.preserves_form()
            } else {
                action.preserves_form()
            };
            Ok(GeneratorCheck {
                generator: g,
                preserves_form,
                quadratic_witness,
            })
        })
        .collect()
}
