//! Stabilizer codes as subspaces `S̄` of the symplectic space.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{symplectic_dual, BitMatrix, BitVec, Echelon, SympSpan, SympVector};
use crate::pauli::PauliElement;

/// A code given by an ordered list of generators of `S̄`, each with a character
/// sign. Construction only checks shapes; [`StabilizerCode::validate`] checks the geometry.
#[derive(Clone)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<SympVector>,
    negative: Vec<bool>,
    span: SympSpan,
    dual_basis: Vec<SympVector>,
}

impl StabilizerCode {
    /// All generator signs `+1`.
    pub fn new(n: usize, generators: Vec<SympVector>) -> Result<Self> {
        let signs = vec![false; generators.len()];
        Self::with_signs(n, generators, signs)
    }

    /// `negative[i]` marks generator `i` as having character value `-1`.
    pub fn with_signs(n: usize, generators: Vec<SympVector>, negative: Vec<bool>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCode("n must be positive".into()));
        }
        if negative.len() != generators.len() {
            return Err(Error::dim(generators.len(), negative.len()));
        }
        let span = SympSpan::new(n, &generators)?;
        let dual_basis = symplectic_dual(n, &generators)?;
        Ok(Self {
            n,
            generators,
            negative,
            span,
            dual_basis,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SympVector] {
        &self.generators
    }

    /// Per-generator character, `true` meaning `-1`.
    pub fn negative_signs(&self) -> &[bool] {
        &self.negative
    }

    /// The generators as Pauli elements carrying their signs.
    pub fn stabilizer_elements(&self) -> Vec<PauliElement> {
        self.generators
            .iter()
            .zip(&self.negative)
            .map(|(g, &neg)| PauliElement::real(g.clone(), neg))
            .collect()
    }

    /// `dim S̄`.
    pub fn dim_s(&self) -> usize {
        self.span.dim()
    }

    /// `n - dim S̄`.
    pub fn encoded_qubits(&self) -> usize {
        self.n - self.dim_s()
    }

    pub fn span(&self) -> &SympSpan {
        &self.span
    }

    /// Basis of `S̄⊥`, of dimension `2n - dim S̄`.
    pub fn dual_basis(&self) -> &[SympVector] {
        &self.dual_basis
    }

    pub fn in_stabilizer(&self, v: &SympVector) -> Result<bool> {
        self.span.contains(v)
    }

    /// `v ∈ S̄⊥`, tested against the generators directly.
    pub fn in_dual(&self, v: &SympVector) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::dim(self.n, v.n()));
        }
        Ok(self.generators.iter().all(|g| !g.sp(v)))
    }

    pub fn validate(&self, strict: bool) -> ValidationReport {
        let k = self.generators.len();
        let mut non_commuting = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.generators[i].sp(&self.generators[j]) {
                    non_commuting.push((i, j));
                }
            }
        }
        let mut singular_violations = Vec::new();
        if strict {
            for i in 0..k {
                if self.generators[i].quadratic_form() {
                    singular_violations.push((i, None));
                }
            }
            for i in 0..k {
                for j in i + 1..k {
                    if self.generators[i].xor(&self.generators[j]).quadratic_form() {
                        singular_violations.push((i, Some(j)));
                    }
                }
            }
        }
        ValidationReport {
            n: self.n,
            strict,
            generator_count: k,
            rank: self.dim_s(),
            non_commuting,
            singular_violations,
        }
    }

    pub fn is_valid(&self, strict: bool) -> bool {
        self.validate(strict).is_valid()
    }

    pub(crate) fn require_valid(&self, strict: bool) -> Result<()> {
        let report = self.validate(strict);
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidCode(report.summary()))
        }
    }

    /// Every pair `(e1, e2)` must have `ē1 + ē2 ∈ S̄` or
    /// `ē1 + ē2 ∉ S̄⊥`. Pairs are visited as `(i, j)` with `i <= j` in list order.
    pub fn correctable(&self, errors: &[PauliElement]) -> Result<Correctability> {
        if let Some(bad) = errors.iter().find(|e| e.n() != self.n) {
            return Err(Error::dim(self.n, bad.n()));
        }
        for i in 0..errors.len() {
            for j in i..errors.len() {
                let sum = errors[i].vector().xor(errors[j].vector());
                if self.in_dual(&sum)? && !self.in_stabilizer(&sum)? {
                    return Ok(Correctability {
                        correctable: false,
                        failing_pair: Some((i, j)),
                        product: Some(sum),
                    });
                }
            }
        }
        Ok(Correctability {
            correctable: true,
            failing_pair: None,
            product: None,
        })
    }

    /// The code file text: `n=<n>` then one `[-]<a>|<b>` line per generator.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for (g, &neg) in self.generators.iter().zip(&self.negative) {
            if neg {
                out.push('-');
            }
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the code file format. `#` starts a comment; the `n=` header is
    /// required only when there are no generators.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut generators = Vec::new();
        let mut negative = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let indent = content.len() - content.trim_start().len();
            let perr = |col: usize, message: String| Error::Parse {
                line: line_no,
                column: indent + col,
                message,
            };
            if let Some(value) = trimmed.strip_prefix("n=") {
                if n.is_some() || !generators.is_empty() {
                    return Err(perr(1, "header 'n=' must come first and only once".into()));
                }
                let parsed = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| perr(3, format!("invalid qubit count {:?}", value.trim())))?;
                if parsed == 0 {
                    return Err(perr(3, "qubit count must be positive".into()));
                }
                n = Some(parsed);
                continue;
            }
            let (neg, body, offset) = match trimmed.strip_prefix('-') {
                Some(rest) => (true, rest, 2),
                None => (false, trimmed, 1),
            };
            let (a, b) = body
                .split_once('|')
                .ok_or_else(|| perr(offset, "expected '<a-bits>|<b-bits>'".into()))?;
            if let Some((i, c)) = a
                .chars()
                .chain(std::iter::once('|'))
                .chain(b.chars())
                .enumerate()
                .find(|(_, c)| !matches!(c, '0' | '1' | '|'))
            {
                return Err(perr(offset + i, format!("unexpected character {c:?}")));
            }
            if b.contains('|') {
                let at = a.len() + 1 + b.find('|').unwrap_or(0);
                return Err(perr(offset + at, "more than one '|'".into()));
            }
            if a.len() != b.len() {
                return Err(perr(
                    offset + a.len(),
                    format!("X part has {} bits but Z part has {}", a.len(), b.len()),
                ));
            }
            let expected = *n.get_or_insert(a.len());
            if a.len() != expected {
                return Err(perr(offset, format!("expected {expected} qubits, found {}", a.len())));
            }
            let v = SympVector::new(a.parse()?, b.parse()?)?;
            generators.push(v);
            negative.push(neg);
        }
        let n = n.ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "empty code file needs an 'n=<int>' header".into(),
        })?;
        Self::with_signs(n, generators, negative)
    }
}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StabilizerCode")
            .field("n", &self.n)
            .field("generators", &self.generators)
            .field("negative", &self.negative)
            .finish()
    }
}

impl PartialEq for StabilizerCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generators == other.generators && self.negative == other.negative
    }
}

impl Eq for StabilizerCode {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub strict: bool,
    pub generator_count: usize,
    pub rank: usize,
    /// Generator index pairs with nonzero symplectic product.
    pub non_commuting: Vec<(usize, usize)>,
    /// `(i, None)` when `Q(g_i) = 1`, `(i, Some(j))` when `Q(g_i + g_j) = 1`.
    pub singular_violations: Vec<(usize, Option<usize>)>,
}

impl ValidationReport {
    pub fn independent(&self) -> bool {
        self.rank == self.generator_count
    }

    pub fn is_valid(&self) -> bool {
        self.independent() && self.non_commuting.is_empty() && self.singular_violations.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut problems = Vec::new();
        if !self.independent() {
            problems.push(format!(
                "generators are dependent (rank {} < {})",
                self.rank, self.generator_count
            ));
        }
        for (i, j) in &self.non_commuting {
            problems.push(format!("generators {i} and {j} anticommute"));
        }
        for (i, j) in &self.singular_violations {
            match j {
                None => problems.push(format!("Q(g{i}) = 1")),
                Some(j) => problems.push(format!("Q(g{i} + g{j}) = 1")),
            }
        }
        if problems.is_empty() {
            "valid".into()
        } else {
            problems.join("; ")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correctability {
    pub correctable: bool,
    /// Indices into the error list of the first failing pair.
    pub failing_pair: Option<(usize, usize)>,
    /// `ē1 + ē2` for the failing pair; it lies in `S̄⊥ \ S̄`.
    pub product: Option<SympVector>,
}

/// The three fixed example codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    FiveQubit,
    EightQubit,
    TenQubit,
}

const FIVE_QUBIT: [&str; 4] = ["11000|00101", "01100|10010", "00110|01001", "00011|10100"];

const EIGHT_QUBIT: [&str; 5] = [
    "01110100|00111010",
    "00111010|00011101",
    "00011101|01001110",
    "11111111|00000000",
    "00000000|11111111",
];

const TEN_QUBIT: [&str; 6] = [
    "0110011110|1001001100",
    "0011001111|0100100110",
    "0001110111|1010000011",
    "1000111011|0101010001",
    "1111111111|0000000000",
    "0000000000|1111111111",
];

impl Builtin {
    pub const ALL: [Builtin; 3] = [Builtin::FiveQubit, Builtin::EightQubit, Builtin::TenQubit];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::FiveQubit => "five_qubit",
            Builtin::EightQubit => "eight_qubit",
            Builtin::TenQubit => "ten_qubit",
        }
    }

    /// Generator rows exactly as tabulated, as `"<a>|<b>"` strings.
    pub fn rows(self) -> &'static [&'static str] {
        match self {
            Builtin::FiveQubit => &FIVE_QUBIT,
            Builtin::EightQubit => &EIGHT_QUBIT,
            Builtin::TenQubit => &TEN_QUBIT,
        }
    }

    pub fn code(self) -> StabilizerCode {
        let rows: Vec<SympVector> = self
            .rows()
            .iter()
            .map(|r| r.parse().expect("builtin rows are well formed"))
            .collect();
        StabilizerCode::new(rows[0].n(), rows).expect("builtin rows share n")
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownBuiltin(s.to_string()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn builtin(name: &str) -> Result<StabilizerCode> {
    Ok(name.parse::<Builtin>()?.code())
}

/// CSS code from a classical code `C` (rows of `generator` span `C`) with
/// `C⊥ ⊆ C`: `S̄` is spanned by `(v|0)` and `(0|v)` over a basis of `C⊥`.
/// The result has `dim S̄ = 2(n - dim C)` and encodes `2 dim C - n` qubits.
pub fn css_from_classical(generator: &BitMatrix, n: usize) -> Result<StabilizerCode> {
    if generator.col_count() != n {
        return Err(Error::dim(n, generator.col_count()));
    }
    let code_space = generator.echelon();
    let dual = generator.nullspace();
    if let Some(w) = dual.iter().find(|v| !code_space.contains(v)) {
        return Err(Error::not_dual_containing(w));
    }
    let zero = BitVec::zeros(n);
    let mut rows: Vec<SympVector> = dual
        .iter()
        .map(|v| SympVector::new(v.clone(), zero.clone()))
        .collect::<Result<_>>()?;
    rows.extend(
        dual.iter()
            .map(|v| SympVector::new(zero.clone(), v.clone()))
            .collect::<Result<Vec<_>>>()?,
    );
    StabilizerCode::new(n, rows)
}

/// Minimum Hamming weight of a nonzero codeword in the row space of `generator`,
/// by enumeration of all `2^rank` codewords.
pub fn classical_min_distance(generator: &BitMatrix) -> Result<Option<usize>> {
    let ech = generator.echelon();
    let k = ech.rank();
    if k > 30 {
        return Err(Error::OutOfRange(format!(
            "classical dimension {k} too large to enumerate"
        )));
    }
    let mut best: Option<usize> = None;
    let mut acc = BitVec::zeros(generator.col_count());
    for i in 1u64..(1u64 << k) {
        acc.xor_assign(&ech.rows()[i.trailing_zeros() as usize]);
        let w = acc.weight();
        best = Some(best.map_or(w, |b| b.min(w)));
    }
    Ok(best)
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Quadratic-residue code for a prime `p ≡ 5 (mod 8)`. The first generator has
/// `a_j = 1` for nonzero residues `j` and `b_j = 1` for nonresidues (position 0
/// is `(0,0)`); the other `p - 2` generators are its successive cyclic shifts.
pub fn quadratic_residue_code(p: u64) -> Result<StabilizerCode> {
    if !is_prime(p) || p % 8 != 5 {
        return Err(Error::InvalidPrime { p });
    }
    let n = p as usize;
    let mut residue = vec![false; n];
    for k in 1..p {
        residue[((k * k) % p) as usize] = true;
    }
    let mut first = SympVector::zero(n);
    for (j, &is_res) in residue.iter().enumerate().skip(1) {
        if is_res {
            first.a_mut().set(j, true);
        } else {
            first.b_mut().set(j, true);
        }
    }
    let rows: Vec<SympVector> = (0..n - 1).map(|s| first.rotate_right(s)).collect();
    let code = StabilizerCode::new(n, rows)?;
    if code.dim_s() != n - 1 {
        return Err(Error::Internal(format!(
            "quadratic-residue generators for p={p} have rank {} instead of {}",
            code.dim_s(),
            n - 1
        )));
    }
    Ok(code)
}

/// Extends a basis of `S̄` by vectors of `S̄⊥` to a basis of `S̄⊥`; the first
/// `dim S̄` returned rows are the generators themselves.
pub(crate) fn dual_basis_over_stabilizer(code: &StabilizerCode) -> Vec<SympVector> {
    let mut ech = Echelon::from_rows(2 * code.n(), code.generators().iter().map(SympVector::to_bits));
    let mut rows: Vec<SympVector> = code.generators().to_vec();
    for v in code.dual_basis() {
        if ech.insert(v.to_bits()) {
            rows.push(v.clone());
        }
    }
    rows
}
