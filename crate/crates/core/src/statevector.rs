//! Dense state vectors for small `n`, used to check the geometry against
//! Hilbert space directly.
//!
//! Basis states `|v⟩` are indexed with the leftmost printed bit of `v` as the
//! most significant index bit, so `|10⟩` is index 2.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;

use crate::clifford::Generator;
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::gf2::{BitVec, SympVector};
use crate::pauli::{Mode, PauliElement};

/// Offending basis pair and matrix entry.
type Entry = ((usize, usize), Complex64);

pub const MAX_QUBITS: usize = 12;
/// Largest `n` accepted by [`verify_kl_conditions`].
pub const MAX_KL_QUBITS: usize = 10;
/// Largest `n` for which generator unitaries are built densely.
pub const MAX_UNITARY_QUBITS: usize = 6;

/// Tolerance for the error-correction conditions.
pub const CONDITION_TOL: f64 = 1e-9;
/// Tolerance for linear-algebra identities.
pub const LINALG_TOL: f64 = 1e-12;

fn check_n(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// Index of the basis state `|v⟩`.
pub fn basis_index(v: &BitVec) -> usize {
    let n = v.len();
    v.iter_ones().fold(0, |acc, j| acc | 1 << (n - 1 - j))
}

/// The bit vector `v` of basis index `index`.
pub fn index_bits(n: usize, index: usize) -> BitVec {
    let mut v = BitVec::zeros(n);
    for j in 0..n {
        if (index >> (n - 1 - j)) & 1 == 1 {
            v.set(j, true);
        }
    }
    v
}

fn i_pow(k: u8) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

#[derive(Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n, MAX_QUBITS)?;
        Ok(Self {
            n,
            amps: vec![Complex64::new(0.0, 0.0); 1 << n],
        })
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let mut s = Self::zeros(n)?;
        if index >= s.amps.len() {
            return Err(Error::OutOfRange(format!("basis index {index} for n = {n}")));
        }
        s.amps[index] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_n(n, MAX_QUBITS)?;
        if amps.len() != 1 << n {
            return Err(Error::dim(1 << n, amps.len()));
        }
        Ok(Self { n, amps })
    }

    /// Normalized sum of `sign · |bits⟩` terms, e.g. `[(1.0, "00000"), (-1.0, "10100")]`.
    pub fn from_terms(terms: &[(f64, &str)]) -> Result<Self> {
        let n = terms.first().map_or(0, |(_, b)| b.len());
        let mut s = Self::zeros(n)?;
        for (coeff, bits) in terms {
            let v: BitVec = bits.parse()?;
            if v.len() != n {
                return Err(Error::dim(n, v.len()));
            }
            s.amps[basis_index(&v)] += Complex64::new(*coeff, 0.0);
        }
        s.normalize()?;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, v: &BitVec) -> Complex64 {
        self.amps[basis_index(v)]
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(x, y)| x.conj() * y).sum()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::OutOfRange("cannot normalize the zero vector".into()));
        }
        for a in &mut self.amps {
            *a /= norm;
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, c: Complex64, other: &StateVector) {
        for (x, y) in self.amps.iter_mut().zip(&other.amps) {
            *x += c * y;
        }
    }

    pub fn distance(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// One line per nonzero amplitude, `±<bits>`, in index order. If magnitudes
    /// differ, each line also carries the magnitude.
    pub fn dump(&self) -> String {
        let nonzero: Vec<(usize, Complex64)> = self
            .amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > 1e-9)
            .map(|(i, a)| (i, *a))
            .collect();
        let first = nonzero.first().map_or(0.0, |(_, a)| a.norm());
        let uniform = nonzero.iter().all(|(_, a)| (a.norm() - first).abs() < 1e-9);
        let mut out = String::new();
        for (i, a) in nonzero {
            let sign = if a.re < -1e-9 || (a.re.abs() <= 1e-9 && a.im < 0.0) {
                '-'
            } else {
                '+'
            };
            let imag = if a.re.abs() <= 1e-9 { "i" } else { "" };
            out.push(sign);
            out.push_str(imag);
            out.push_str(&index_bits(self.n, i).to_string());
            if !uniform || (a.re.abs() > 1e-9 && a.im.abs() > 1e-9) {
                out.push_str(&format!(" {:.12}{:+.12}i", a.re, a.im));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVector(n={}, {:?})", self.n, self.amps)
    }
}

/// `e |ψ⟩` with `X(a)Z(b)|v⟩ = (-1)^{b·v} |v + a⟩` and the phase of `e` applied last.
pub fn apply_pauli(e: &PauliElement, psi: &StateVector) -> Result<StateVector> {
    check_n(psi.n, MAX_QUBITS)?;
    if e.n() != psi.n {
        return Err(Error::dim(psi.n, e.n()));
    }
    let x_mask = basis_index(e.vector().a());
    let z_mask = basis_index(e.vector().b());
    let phase = i_pow(e.phase_exponent());
    let mut out = vec![Complex64::new(0.0, 0.0); psi.amps.len()];
    for (idx, &amp) in psi.amps.iter().enumerate() {
        let sign = if (idx & z_mask).count_ones() & 1 == 1 {
            -phase
        } else {
            phase
        };
        out[idx ^ x_mask] = sign * amp;
    }
    Ok(StateVector { n: psi.n, amps: out })
}

/// Applies `∏ (I + χ_i s_i) / 2` in place.
fn project(stabilizers: &[PauliElement], character: &[bool], psi: &mut StateVector) -> Result<()> {
    for (s, &neg) in stabilizers.iter().zip(character) {
        let image = apply_pauli(s, psi)?;
        let c = if neg { -0.5 } else { 0.5 };
        for (x, y) in psi.amps.iter_mut().zip(&image.amps) {
            *x = 0.5 * *x + c * y;
        }
    }
    Ok(())
}

/// Dense projector onto the eigenspace of `character`, as columns `P|v⟩` for every `v`.
pub fn projector_columns(code: &StabilizerCode, character: &[bool]) -> Result<Vec<StateVector>> {
    check_n(code.n(), 8)?;
    let stabilizers: Vec<PauliElement> = code
        .generators()
        .iter()
        .cloned()
        .map(PauliElement::from_vector)
        .collect();
    (0..1usize << code.n())
        .map(|idx| {
            let mut col = StateVector::basis(code.n(), idx)?;
            project(&stabilizers, character, &mut col)?;
            Ok(col)
        })
        .collect()
}

/// Orthonormal basis of `{ψ : s_i ψ = χ_i ψ}`, where `character[i] = true`
/// means `χ_i = -1`. The space has dimension `2^{n - dim S̄}`.
///
/// Projections of basis states whose labels differ by the X part of a
/// stabilizer element are parallel, and projections from different X cosets
/// have disjoint support. So one projection per coset (its smallest label)
/// already yields an orthogonal basis, in increasing label order.
pub fn codespace_basis(code: &StabilizerCode, character: &[bool]) -> Result<Vec<StateVector>> {
    let n = code.n();
    check_n(n, MAX_QUBITS)?;
    if character.len() != code.generators().len() {
        return Err(Error::dim(code.generators().len(), character.len()));
    }
    code.require_valid(true)?;
    let stabilizers: Vec<PauliElement> = code
        .generators()
        .iter()
        .cloned()
        .map(PauliElement::from_vector)
        .collect();
    let x_masks: Vec<usize> = code.generators().iter().map(|g| basis_index(g.a())).collect();

    let expected = 1usize << code.encoded_qubits();
    let mut seen = vec![false; 1 << n];
    let mut basis = Vec::with_capacity(expected);
    for start in 0..1usize << n {
        if seen[start] {
            continue;
        }
        // Close the coset start + span(X parts) and mark it.
        let mut coset = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < coset.len() {
            for &m in &x_masks {
                let next = coset[i] ^ m;
                if !seen[next] {
                    seen[next] = true;
                    coset.push(next);
                }
            }
            i += 1;
        }
        let mut psi = StateVector::basis(n, start)?;
        project(&stabilizers, character, &mut psi)?;
        if psi.norm() > 1e-6 {
            psi.normalize()?;
            basis.push(psi);
        }
    }
    if basis.len() != expected {
        return Err(Error::Internal(format!(
            "eigenspace has dimension {} but 2^(n - dim S) = {expected}",
            basis.len()
        )));
    }
    Ok(basis)
}

/// A violation of the error-correction conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct KlViolation {
    /// Indices into the error list.
    pub errors: (usize, usize),
    /// Indices into the codespace basis.
    pub codewords: (usize, usize),
    /// `⟨c1|e1⁻¹e2|c2⟩`, or for a diagonal violation the difference of the two diagonal entries.
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KlReport {
    pub satisfied: bool,
    pub violation: Option<KlViolation>,
    /// Distinct products `ē1 + ē2` examined.
    pub products_checked: usize,
}

fn check_operator(op: &PauliElement, basis: &[StateVector]) -> Result<Option<Entry>> {
    let images: Vec<StateVector> = basis.iter().map(|c| apply_pauli(op, c)).collect::<Result<_>>()?;
    let reference = basis[0].inner(&images[0]);
    for (i, ci) in basis.iter().enumerate() {
        for (j, img) in images.iter().enumerate() {
            let value = ci.inner(img);
            if i != j && value.norm() > CONDITION_TOL {
                return Ok(Some(((i, j), value)));
            }
            if i == j && (value - reference).norm() > CONDITION_TOL {
                return Ok(Some(((0, i), value - reference)));
            }
        }
    }
    Ok(None)
}

/// Checks `⟨c_i|e1⁻¹e2|c_j⟩ = 0` for `i ≠ j` and equal diagonal entries, over an
/// orthonormal codespace basis and every pair of errors (visited as `(i, j)`,
/// `i <= j`). Both conditions are linear in the codewords, so the basis pairs
/// imply them for all vectors of the code.
pub fn verify_kl_conditions(code: &StabilizerCode, character: &[bool], errors: &[PauliElement]) -> Result<KlReport> {
    check_n(code.n(), MAX_KL_QUBITS)?;
    if let Some(bad) = errors.iter().find(|e| e.n() != code.n()) {
        return Err(Error::dim(code.n(), bad.n()));
    }
    let basis = codespace_basis(code, character)?;
    // Conditions are unchanged by a global phase, so cache by the vector part.
    let mut cache: HashMap<SympVector, Option<Entry>> = HashMap::new();
    for i in 0..errors.len() {
        for j in i..errors.len() {
            let e1 = errors[i].clone().with_mode(Mode::Complex)?;
            let e2 = errors[j].clone().with_mode(Mode::Complex)?;
            let op = e1.inverse().multiply(&e2)?;
            let key = op.vector().clone();
            let verdict = match cache.get(&key) {
                Some(v) => *v,
                None => {
                    let v = check_operator(&op, &basis)?;
                    cache.insert(key, v);
                    v
                }
            };
            if let Some((codewords, value)) = verdict {
                return Ok(KlReport {
                    satisfied: false,
                    violation: Some(KlViolation {
                        errors: (i, j),
                        codewords,
                        value,
                    }),
                    products_checked: cache.len(),
                });
            }
        }
    }
    Ok(KlReport {
        satisfied: true,
        violation: None,
        products_checked: cache.len(),
    })
}

/// The two five-qubit codewords as printed, unnormalized `±1` terms.
pub const FIVE_QUBIT_C0: [(f64, &str); 16] = [
    (1.0, "00000"),
    (1.0, "11000"),
    (1.0, "01100"),
    (1.0, "00110"),
    (1.0, "00011"),
    (1.0, "10001"),
    (-1.0, "10100"),
    (-1.0, "01010"),
    (-1.0, "00101"),
    (-1.0, "10010"),
    (-1.0, "01001"),
    (-1.0, "11110"),
    (-1.0, "01111"),
    (-1.0, "10111"),
    (-1.0, "11011"),
    (-1.0, "11101"),
];

pub const FIVE_QUBIT_C1: [(f64, &str); 16] = [
    (1.0, "11111"),
    (1.0, "00111"),
    (1.0, "10011"),
    (1.0, "11001"),
    (1.0, "11100"),
    (1.0, "01110"),
    (-1.0, "01011"),
    (-1.0, "10101"),
    (-1.0, "11010"),
    (-1.0, "01101"),
    (-1.0, "10110"),
    (-1.0, "00001"),
    (-1.0, "10000"),
    (-1.0, "01000"),
    (-1.0, "00100"),
    (-1.0, "00010"),
];

/// `|c0⟩, |c1⟩` of the five-qubit code, normalized by `1/4`.
pub fn five_qubit_codewords() -> [StateVector; 2] {
    [
        StateVector::from_terms(&FIVE_QUBIT_C0).expect("static terms"),
        StateVector::from_terms(&FIVE_QUBIT_C1).expect("static terms"),
    ]
}

/// A dense `2^n × 2^n` complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct DenseOperator {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseOperator {
    fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &DenseOperator) -> DenseOperator {
        let d = self.dim;
        let mut out = DenseOperator::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let x = self.get(r, k);
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..d {
                    out.data[r * d + c] += x * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> DenseOperator {
        let mut out = DenseOperator::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn max_distance(&self, other: &DenseOperator) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let prod = self.adjoint().mul(self);
        let mut id = DenseOperator::zeros(self.dim);
        for i in 0..self.dim {
            id.set(i, i, Complex64::new(1.0, 0.0));
        }
        prod.max_distance(&id) <= tol
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|x| x.im.abs() <= tol)
    }

    /// Matrix of a Pauli element, built column by column from [`apply_pauli`].
    pub fn from_pauli(e: &PauliElement) -> Result<DenseOperator> {
        let n = e.n();
        check_n(n, MAX_UNITARY_QUBITS)?;
        let d = 1usize << n;
        let mut out = DenseOperator::zeros(d);
        for c in 0..d {
            let col = apply_pauli(e, &StateVector::basis(n, c)?)?;
            for (r, &v) in col.amps.iter().enumerate() {
                out.set(r, c, v);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for DenseOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseOperator(dim={})", self.dim)
    }
}

/// The orthogonal or unitary matrix realizing a generator on `n` qubits.
///
/// `d_M = diag((-1)^{Q_M(v)})` with `Q_M(v) = Σ_{i<j} M_ij v_i v_j`, and
/// `d_P = diag(i^{T_P(v)})` with `T_P(v) = Σ_i P_ii v_i + 2 Σ_{i<j} P_ij v_i v_j mod 4`.
pub fn generator_unitary(g: &Generator, n: usize) -> Result<DenseOperator> {
    check_n(n, MAX_UNITARY_QUBITS)?;
    // Validates shapes, symmetry and invertibility.
    g.action(n)?;
    let d = 1usize << n;
    let mut out = DenseOperator::zeros(d);
    match g {
        Generator::HadamardAll => {
            let scale = (d as f64).sqrt().recip();
            for r in 0..d {
                for c in 0..d {
                    let s = if (r & c).count_ones() & 1 == 1 { -scale } else { scale };
                    out.set(r, c, Complex64::new(s, 0.0));
                }
            }
        }
        Generator::Hadamard(j) => {
            let bit = 1usize << (n - j);
            let s = std::f64::consts::FRAC_1_SQRT_2;
            for c in 0..d {
                out.set(c & !bit, c, Complex64::new(s, 0.0));
                let sign = if c & bit != 0 { -s } else { s };
                out.set(c | bit, c, Complex64::new(sign, 0.0));
            }
        }
        Generator::Gl(a) => {
            for c in 0..d {
                let v = index_bits(n, c);
                let image = a.left_mul(&v);
                out.set(basis_index(&image), c, Complex64::new(1.0, 0.0));
            }
        }
        Generator::Diag(m) | Generator::DiagComplex(m) => {
            for c in 0..d {
                let v = index_bits(n, c);
                let ones: Vec<usize> = v.iter_ones().collect();
                let mut t = 0u32;
                for (x, &i) in ones.iter().enumerate() {
                    t += m.get(i, i) as u32;
                    for &j in &ones[x + 1..] {
                        t += 2 * m.get(i, j) as u32;
                    }
                }
                // For d_M the diagonal is zero and t = 2 Q_M(v).
                out.set(c, c, i_pow((t % 4) as u8));
            }
        }
    }
    Ok(out)
}

/// `U e U†` expressed as `i^k X(a')Z(b')`, or `None` if it is not a scaled Pauli element.
pub fn conjugate_pauli(u: &DenseOperator, e: &PauliElement) -> Result<Option<PauliElement>> {
    let n = e.n();
    if u.dim() != 1 << n {
        return Err(Error::dim(1 << n, u.dim()));
    }
    let conj = u.mul(&DenseOperator::from_pauli(e)?).mul(&u.adjoint());
    // Column 0 is c|a'⟩.
    let Some(row) = (0..u.dim()).find(|&r| conj.get(r, 0).norm() > 0.5) else {
        return Ok(None);
    };
    let c = conj.get(row, 0);
    let Some(k) = (0u8..4).find(|&k| (c - i_pow(k)).norm() < 1e-9) else {
        return Ok(None);
    };
    let a = index_bits(n, row);
    let mut b = BitVec::zeros(n);
    for q in 0..n {
        let v = BitVec::unit(n, q);
        let entry = conj.get(basis_index(&v.xor(&a)), basis_index(&v));
        if (entry + c).norm() < 1e-9 {
            b.set(q, true);
        }
    }
    let candidate = PauliElement::complex(SympVector::new(a, b)?, k);
    if DenseOperator::from_pauli(&candidate)?.max_distance(&conj) > 1e-9 {
        return Ok(None);
    }
    Ok(Some(candidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::representative_generators;
    use crate::code::{quadratic_residue_code, Builtin};
    use crate::pauli::weight_t_error_set;

    fn p(s: &str) -> PauliElement {
        s.parse().unwrap()
    }

    #[test]
    fn index_convention() {
        let v: BitVec = "10".parse().unwrap();
        assert_eq!(basis_index(&v), 2);
        assert_eq!(
            index_bits(5, basis_index(&"11010".parse().unwrap())).to_string(),
            "11010"
        );
    }

    #[test]
    fn pauli_action_examples() {
        let s = apply_pauli(&p("X(10)Z(00)"), &StateVector::basis(2, 0).unwrap()).unwrap();
        assert_eq!(s, StateVector::basis(2, 2).unwrap());

        let plus = StateVector::from_terms(&[(1.0, "00"), (1.0, "01")]).unwrap();
        let minus = StateVector::from_terms(&[(1.0, "00"), (-1.0, "01")]).unwrap();
        assert!(apply_pauli(&p("X(00)Z(01)"), &plus).unwrap().distance(&minus) < LINALG_TOL);
        assert!(apply_pauli(&p("X(000)Z(000)"), &plus).is_err());
    }

    #[test]
    fn printed_codewords_are_fixed() {
        let [c0, c1] = five_qubit_codewords();
        let s = p("X(11000)Z(00101)");
        assert_eq!(apply_pauli(&s, &c0).unwrap(), c0);
        assert_eq!(apply_pauli(&s, &c1).unwrap(), c1);
        assert!((c0.norm() - 1.0).abs() < LINALG_TOL);
        assert!(c0.inner(&c1).norm() < LINALG_TOL);
    }

    #[test]
    fn five_qubit_codespace_contains_printed_words() {
        let code = Builtin::FiveQubit.code();
        let basis = codespace_basis(&code, &[false; 4]).unwrap();
        assert_eq!(basis.len(), 2);
        for c in five_qubit_codewords() {
            let weight: f64 = basis.iter().map(|b| b.inner(&c).norm_sqr()).sum();
            assert!((weight - 1.0).abs() < LINALG_TOL);
        }
        assert!((basis[0].inner(&five_qubit_codewords()[0]).norm() - 1.0).abs() < LINALG_TOL);
        assert!((basis[1].inner(&five_qubit_codewords()[1]).norm() - 1.0).abs() < LINALG_TOL);
    }

    #[test]
    fn characters_partition_the_space() {
        let code = Builtin::FiveQubit.code();
        let mut all = Vec::new();
        for ch in 0u32..16 {
            let character: Vec<bool> = (0..4).map(|i| (ch >> i) & 1 == 1).collect();
            let basis = codespace_basis(&code, &character).unwrap();
            assert_eq!(basis.len(), 2);
            all.extend(basis);
        }
        assert_eq!(all.len(), 32);
        for (i, x) in all.iter().enumerate() {
            for (j, y) in all.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((x.inner(y).norm() - expected).abs() < LINALG_TOL);
            }
        }
    }

    #[test]
    fn empty_stabilizer_is_full_space() {
        let code = StabilizerCode::new(1, vec![]).unwrap();
        assert_eq!(codespace_basis(&code, &[]).unwrap().len(), 2);
    }

    #[test]
    fn codespace_rejects_bad_inputs() {
        let code = Builtin::FiveQubit.code();
        assert!(codespace_basis(&code, &[false; 3]).is_err());
        let bad = StabilizerCode::new(1, vec!["1|1".parse().unwrap()]).unwrap();
        assert!(matches!(codespace_basis(&bad, &[false]), Err(Error::InvalidCode(_))));
    }

    #[test]
    fn projector_is_idempotent_and_hermitian() {
        let code = Builtin::FiveQubit.code();
        let character = [false, true, false, true];
        let cols = projector_columns(&code, &character).unwrap();
        let d = cols.len();
        let entry = |r: usize, c: usize| cols[c].amplitudes()[r];
        let mut trace = 0.0;
        for r in 0..d {
            trace += entry(r, r).re;
            for c in 0..d {
                assert!((entry(r, c) - entry(c, r).conj()).norm() < LINALG_TOL);
                let sq: Complex64 = (0..d).map(|k| entry(r, k) * entry(k, c)).sum();
                assert!((sq - entry(r, c)).norm() < LINALG_TOL);
            }
        }
        assert!((trace - 2.0).abs() < LINALG_TOL);
    }

    #[test]
    fn kl_conditions_five_qubit() {
        let code = Builtin::FiveQubit.code();
        let ch = [false; 4];
        let t1 = verify_kl_conditions(&code, &ch, &weight_t_error_set(5, 1).unwrap()).unwrap();
        assert!(t1.satisfied);
        let errors = weight_t_error_set(5, 2).unwrap();
        let t2 = verify_kl_conditions(&code, &ch, &errors).unwrap();
        assert!(!t2.satisfied);
        let v = t2.violation.unwrap();
        let geometric = code.correctable(&errors).unwrap();
        assert!(!geometric.correctable);
        let sum = errors[v.errors.0].vector().xor(errors[v.errors.1].vector());
        assert!(code.in_dual(&sum).unwrap() && !code.in_stabilizer(&sum).unwrap());
        let id = verify_kl_conditions(&code, &ch, &[PauliElement::identity(5)]).unwrap();
        assert!(id.satisfied);
    }

    #[test]
    fn kl_rejects_large_n() {
        let code = quadratic_residue_code(13).unwrap();
        assert_eq!(
            verify_kl_conditions(&code, &[false; 12], &[]).unwrap_err(),
            Error::TooLarge { n: 13, max: 10 }
        );
    }

    #[test]
    fn errors_permute_eigenspaces() {
        let code = Builtin::FiveQubit.code();
        let mut seed = 0x9e37_79b9_7f4a_7c15u64;
        for _ in 0..20 {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            let v = SympVector::new(BitVec::from_u64(5, seed), BitVec::from_u64(5, seed >> 5)).unwrap();
            let character: Vec<bool> = (0..4).map(|i| (seed >> (20 + i)) & 1 == 1).collect();
            let shifted: Vec<bool> = code
                .generators()
                .iter()
                .zip(&character)
                .map(|(g, &c)| c ^ g.sp(&v))
                .collect();
            let e = PauliElement::from_vector(v);
            let target = codespace_basis(&code, &shifted).unwrap();
            for c in codespace_basis(&code, &character).unwrap() {
                let img = apply_pauli(&e, &c).unwrap();
                let captured: f64 = target.iter().map(|t| t.inner(&img).norm_sqr()).sum();
                assert!((captured - 1.0).abs() < LINALG_TOL);
            }
        }
    }

    #[test]
    fn generator_unitaries_and_conjugation() {
        for n in 1..=3 {
            for g in representative_generators(n) {
                let u = generator_unitary(&g, n).unwrap();
                assert!(u.is_unitary(LINALG_TOL), "{g}");
                if g.kind() == crate::clifford::CliffordKind::Real {
                    assert!(u.is_real(0.0), "{g}");
                }
                let action = g.action(n).unwrap();
                for bits in 0u64..(1 << (2 * n)) {
                    let v = SympVector::from_bits(&BitVec::from_u64(2 * n, bits)).unwrap();
                    let e = PauliElement::from_vector(v.clone());
                    let image = conjugate_pauli(&u, &e)
                        .unwrap()
                        .expect("Clifford maps Paulis to Paulis");
                    assert_eq!(image.vector(), &action.apply(&v).unwrap(), "{g} on {v}");
                    if g.kind() == crate::clifford::CliffordKind::Real {
                        assert_eq!(image.phase_exponent() % 2, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn dump_matches_listing_style() {
        let [c0, _] = five_qubit_codewords();
        let text = c0.dump();
        assert_eq!(text.lines().count(), 16);
        assert_eq!(text.lines().next(), Some("+00000"));
        assert!(text.contains("-10100\n"));
    }
}
