//! Elements of the extraspecial group `E = {±X(a)Z(b)}` and its complex
//! extension `E' = {i^k X(a)Z(b)}`.
//!
//! Single-qubit factors follow the convention `σ_y = σ_x σ_z`, which is the real
//! matrix `[[0, -1], [1, 0]]` and differs from the usual Hermitian Pauli Y by a
//! factor of `i`. An element is kept in the normal form `X(a)Z(b)(-I)^λ` (real
//! mode) or `i^λ X(a)Z(b)` (complex mode); both share the same phase storage.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{BitVec, SympVector};

/// Which group an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Phases ±1, the real group `E`.
    #[default]
    Real,
    /// Phases in {1, i, -1, -i}, the group `E'`.
    Complex,
}

/// A Pauli element `i^phase · X(a)Z(b)`. In real mode `phase` is 0 or 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliElement {
    v: SympVector,
    phase: u8,
    mode: Mode,
}

impl PauliElement {
    pub fn identity(n: usize) -> Self {
        Self::from_vector(SympVector::zero(n))
    }

    /// `+X(a)Z(b)` in real mode.
    pub fn from_vector(v: SympVector) -> Self {
        Self {
            v,
            phase: 0,
            mode: Mode::Real,
        }
    }

    /// `X(a)Z(b)(-I)^λ` with `negative = λ`.
    pub fn real(v: SympVector, negative: bool) -> Self {
        Self {
            v,
            phase: if negative { 2 } else { 0 },
            mode: Mode::Real,
        }
    }

    /// `i^k X(a)Z(b)`.
    pub fn complex(v: SympVector, k: u8) -> Self {
        Self {
            v,
            phase: k % 4,
            mode: Mode::Complex,
        }
    }

    pub fn vector(&self) -> &SympVector {
        &self.v
    }

    pub fn n(&self) -> usize {
        self.v.n()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Exponent of `i` in the normal form.
    pub fn phase_exponent(&self) -> u8 {
        self.phase
    }

    pub fn is_negative(&self) -> bool {
        self.phase == 2
    }

    pub fn with_mode(mut self, mode: Mode) -> Result<Self> {
        if mode == Mode::Real && self.phase % 2 == 1 {
            return Err(Error::ModeMismatch);
        }
        self.mode = mode;
        Ok(self)
    }

    pub fn weight(&self) -> usize {
        self.v.weight()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::dim(self.n(), other.n()));
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    /// Group product in normal form. Moving `Z(b1)` past `X(a2)` contributes `(-1)^{b1·a2}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let reorder = if self.v.b().dot(other.v.a()) { 2 } else { 0 };
        Ok(Self {
            v: self.v.xor(&other.v),
            phase: (self.phase + other.phase + reorder) % 4,
            mode: self.mode,
        })
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::dim(self.n(), other.n()));
        }
        Ok(!self.v.sp(&other.v))
    }

    /// `e^2 = (-I)^{Q(ē)}` times the square of the scalar.
    pub fn square(&self) -> Self {
        self.multiply(self).expect("same element")
    }

    /// Inverse element. For real-mode elements every element is ±its own inverse.
    pub fn inverse(&self) -> Self {
        let q = if self.v.quadratic_form() { 2 } else { 0 };
        Self {
            v: self.v.clone(),
            phase: (4 - self.phase + q) % 4,
            mode: self.mode,
        }
    }
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.phase >= 2 { '-' } else { '+' };
        let imag = if self.phase % 2 == 1 { "i·" } else { "" };
        write!(f, "{sign}{imag}X({})Z({})", self.v.a(), self.v.b())
    }
}

impl fmt::Debug for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PauliElement {
    type Err = Error;

    /// Accepts `±X(bits)Z(bits)` and `±i·X(bits)Z(bits)` (`i*` also accepted).
    /// A leading sign is optional; an `i` factor selects complex mode.
    fn from_str(s: &str) -> Result<Self> {
        let err = |column: usize, message: &str| Error::Parse {
            line: 1,
            column,
            message: message.to_string(),
        };
        let s = s.trim();
        let (negative, rest) = match s.chars().next() {
            Some('-') => (true, &s[1..]),
            Some('+') => (false, &s[1..]),
            _ => (false, s),
        };
        let offset = s.len() - rest.len();
        let (imag, rest) = if let Some(r) = rest.strip_prefix("i·") {
            (true, r)
        } else if let Some(r) = rest.strip_prefix("i*") {
            (true, r)
        } else {
            (false, rest)
        };
        let offset = offset + if imag { s[offset..].len() - rest.len() } else { 0 };
        let rest = rest
            .strip_prefix("X(")
            .ok_or_else(|| err(offset + 1, "expected 'X('"))?;
        let (a, rest) = rest
            .split_once(")Z(")
            .ok_or_else(|| err(offset + 3, "expected ')Z('"))?;
        let b = rest
            .strip_suffix(')')
            .ok_or_else(|| err(s.len(), "expected closing ')'"))?;
        let a: BitVec = a.parse().map_err(|_| err(offset + 3, "invalid X bits"))?;
        let b: BitVec = b.parse().map_err(|_| err(offset + a.len() + 6, "invalid Z bits"))?;
        let v = SympVector::new(a, b)?;
        let base = if negative { 2 } else { 0 };
        Ok(if imag {
            Self::complex(v, base + 1)
        } else {
            Self::real(v, negative)
        })
    }
}

/// All `+1`-phase elements of symplectic weight at most `t`, ordered by weight
/// and then lexicographically on the printed `(a|b)` string.
pub fn weight_t_error_set(n: usize, t: usize) -> Result<Vec<PauliElement>> {
    if t > n {
        return Err(Error::OutOfRange(format!("t = {t} exceeds n = {n}")));
    }
    let mut out = vec![PauliElement::identity(n)];
    for w in 1..=t {
        let mut layer = Vec::new();
        for support in combinations(n, w) {
            // Each qubit in the support carries X (1,0), Z (0,1) or σ_xσ_z (1,1).
            for choice in 0..3usize.pow(w as u32) {
                let mut v = SympVector::zero(n);
                let mut c = choice;
                for &q in &support {
                    match c % 3 {
                        0 => v.a_mut().set(q, true),
                        1 => v.b_mut().set(q, true),
                        _ => {
                            v.a_mut().set(q, true);
                            v.b_mut().set(q, true);
                        }
                    }
                    c /= 3;
                }
                layer.push(v);
            }
        }
        layer.sort_by_cached_key(|v| v.to_string());
        out.extend(layer.into_iter().map(PauliElement::from_vector));
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
