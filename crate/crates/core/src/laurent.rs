//! Laurent polynomials with exact coefficients and span spaces.
//!
//! A Laurent polynomial is a finite map from integer exponent vectors to
//! nonzero coefficients; the zero polynomial is the empty map. Coefficients
//! are generic so the same representation serves the exact rational pipeline
//! and the complex-floating root oracle.

use crate::polytope::{Polytope, PolytopeError};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} out of range 1..={n} at byte {pos}")]
    VariableOutOfRange { pos: usize, index: usize, n: usize },
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("span space must have at least one generator")]
    EmptySpan,
    #[error("generator {index} is the zero polynomial")]
    ZeroGenerator { index: usize },
    #[error("sampled element kept cancelling terms after {retries} retries")]
    CancellationPersisted { retries: usize },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// Exponent vector a ∈ Z^n of a Laurent monomial x^a.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// e_k for 1-based k; k = 0 is the origin (the reference variable x_0 = 1).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        if k >= 1 {
            e[k - 1] = 1;
        }
        ExponentVector(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Coordinates as scalars, for use as a polytope point.
    pub fn to_point<S: Scalar>(&self) -> Vec<S> {
        self.0.iter().map(|&e| S::from_int(e)).collect()
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl std::ops::Sub<&ExponentVector> for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

/// Coefficient ring for Laurent polynomials.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + Neg<Output = Self> + std::ops::Sub<Output = Self> + std::ops::Mul<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + Neg<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Mul<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPolynomial<C> {
    n: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> LaurentPolynomial<C> {
    pub fn zero(n: usize) -> Self {
        LaurentPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(n), c);
        }
        p
    }

    pub fn monomial(exp: ExponentVector, c: C) -> Self {
        let n = exp.dim();
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (ExponentVector, C)>,
    ) -> Result<Self, LaurentError> {
        let mut map: BTreeMap<ExponentVector, C> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.dim() != n {
                return Err(LaurentError::DimensionMismatch {
                    expected: n,
                    got: exp.dim(),
                });
            }
            let entry = map.entry(exp).or_insert_with(C::zero);
            *entry = entry.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPolynomial { n, terms: map })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Option<&C> {
        self.terms.get(exp)
    }

    /// The support: every exponent vector with a nonzero coefficient.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// True iff the polynomial is a single term, hence invertible in the
    /// Laurent ring.
    pub fn is_monomial_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        if self.n != other.n {
            return Err(LaurentError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Self::from_terms(
            self.n,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn scaled(&self, c: &C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            for (e, v) in &self.terms {
                let w = v.clone() * c.clone();
                if !w.is_zero() {
                    terms.insert(e.clone(), w);
                }
            }
        }
        LaurentPolynomial { n: self.n, terms }
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPolynomial<D> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                terms.insert(e.clone(), d);
            }
        }
        LaurentPolynomial { n: self.n, terms }
    }

    /// Restriction of the polynomial to the support points minimizing ⟨v,·⟩.
    /// The zero direction returns the polynomial unchanged.
    pub fn initial_form(&self, v: &[Rational]) -> Result<Self, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        if v.len() != self.n {
            return Err(LaurentError::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let value = |e: &ExponentVector| -> Rational {
            e.entries()
                .iter()
                .zip(v)
                .map(|(&a, vi)| Rational::from_int(a) * vi)
                .sum()
        };
        let min = self.terms.keys().map(&value).min().expect("nonzero");
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| value(e) == min)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(LaurentPolynomial {
            n: self.n,
            terms,
        })
    }
}

impl<C> LaurentPolynomial<C>
where
    C: Coefficient + One + std::ops::Div<Output = C>,
{
    /// Evaluate at a point with all coordinates nonzero.
    pub fn evaluate(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (&a, x) in e.entries().iter().zip(point) {
                if a > 0 {
                    for _ in 0..a {
                        term = term * x.clone();
                    }
                } else if a < 0 {
                    for _ in 0..(-a) {
                        term = term / x.clone();
                    }
                }
            }
            acc = acc + term;
        }
        acc
    }
}

pub type QPoly = LaurentPolynomial<Rational>;

// ---------------------------------------------------------------------------
// Parsing and printing (exact rational coefficients).
//
// Grammar: terms joined by `+`/`-`; a term is `[coeff] [*] x<k>[^<int>]...`
// with integer or `p/q` coefficients, e.g. `3*x1^2*x2^-1 - 5 + x2`.
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> LaurentError {
        LaurentError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn parse_uint(&mut self) -> Result<i64, LaurentError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| LaurentError::Syntax {
                pos: start,
                msg: "integer literal out of range".to_string(),
            })
    }

    fn parse_coefficient(&mut self) -> Result<Rational, LaurentError> {
        let num = self.parse_uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.parse_uint()?;
            if den == 0 {
                return Err(LaurentError::Syntax {
                    pos: den_pos,
                    msg: "zero denominator".to_string(),
                });
            }
            Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
        } else {
            Ok(Rational::from_int(num))
        }
    }

    /// `x<k>[^<int>]`, the cursor sitting on 'x'.
    fn parse_factor(&mut self, exp: &mut [i64]) -> Result<(), LaurentError> {
        let var_pos = self.pos;
        self.pos += 1; // consume 'x'
        let k = self.parse_uint()? as usize;
        if k < 1 || k > self.n {
            return Err(LaurentError::VariableOutOfRange {
                pos: var_pos,
                index: k,
                n: self.n,
            });
        }
        let mut power = 1i64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let mut sign = 1i64;
            match self.peek() {
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                Some(b'+') => {
                    self.pos += 1;
                }
                _ => {}
            }
            power = sign * self.parse_uint()?;
        }
        exp[k - 1] += power;
        Ok(())
    }

    fn parse_term(&mut self) -> Result<(ExponentVector, Rational), LaurentError> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.parse_coefficient()?,
            Some(b'x') => Rational::one(),
            _ => return Err(self.error("expected a coefficient or a variable")),
        };
        let mut exp = vec![0i64; self.n];
        loop {
            self.skip_ws();
            let mut consumed_star = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                consumed_star = true;
            }
            match self.peek() {
                Some(b'x') => self.parse_factor(&mut exp)?,
                _ if consumed_star => return Err(self.error("expected a variable after '*'")),
                _ => break,
            }
        }
        Ok((ExponentVector::new(exp), coeff))
    }

    fn parse(&mut self) -> Result<QPoly, LaurentError> {
        let mut terms: Vec<(ExponentVector, Rational)> = Vec::new();
        self.skip_ws();
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                sign = -Rational::one();
                self.pos += 1;
                self.skip_ws();
            }
            Some(b'+') => {
                self.pos += 1;
                self.skip_ws();
            }
            _ => {}
        }
        loop {
            let (exp, coeff) = self.parse_term()?;
            terms.push((exp, sign.clone() * coeff));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    sign = Rational::one();
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b'-') => {
                    sign = -Rational::one();
                    self.pos += 1;
                    self.skip_ws();
                }
                _ => return Err(self.error("expected '+', '-' or end of input")),
            }
        }
        LaurentPolynomial::from_terms(self.n, terms)
    }
}

/// Parse the textual polynomial grammar with n ambient variables.
pub fn parse_polynomial(text: &str, n: usize) -> Result<QPoly, LaurentError> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
    }
    .parse()
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            let factors: Vec<String> = exp
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(k, &e)| {
                    if e == 1 {
                        format!("x{}", k + 1)
                    } else {
                        format!("x{}^{}", k + 1, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Span spaces and generic elements.
// ---------------------------------------------------------------------------

/// The span of finitely many Laurent polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanSpace<C> {
    n: usize,
    generators: Vec<LaurentPolynomial<C>>,
}

impl<C: Coefficient> SpanSpace<C> {
    pub fn new(
        n: usize,
        generators: Vec<LaurentPolynomial<C>>,
    ) -> Result<Self, LaurentError> {
        if generators.is_empty() {
            return Err(LaurentError::EmptySpan);
        }
        for (i, g) in generators.iter().enumerate() {
            if g.ambient_dim() != n {
                return Err(LaurentError::DimensionMismatch {
                    expected: n,
                    got: g.ambient_dim(),
                });
            }
            if g.is_zero() {
                return Err(LaurentError::ZeroGenerator { index: i });
            }
        }
        Ok(SpanSpace { n, generators })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[LaurentPolynomial<C>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// Union of the generator supports.
    pub fn support_union(&self) -> Vec<ExponentVector> {
        let mut set: std::collections::BTreeSet<ExponentVector> = Default::default();
        for g in &self.generators {
            set.extend(g.support());
        }
        set.into_iter().collect()
    }
}

pub type QSpanSpace = SpanSpace<Rational>;

/// Coefficient distribution for sampling generic elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientSampler {
    /// Uniform random rationals: numerator and denominator uniform in
    /// [1, magnitude], sign uniform. Exact, so downstream combinatorics
    /// stays exact.
    UniformRational { magnitude: u64 },
}

impl Default for CoefficientSampler {
    fn default() -> Self {
        CoefficientSampler::UniformRational { magnitude: 1 << 31 }
    }
}

impl CoefficientSampler {
    pub fn sample(&self, rng: &mut ChaCha20Rng) -> Rational {
        match self {
            CoefficientSampler::UniformRational { magnitude } => {
                let num = rng.gen_range(1..=*magnitude) as i64;
                let den = rng.gen_range(1..=*magnitude) as i64;
                let sign: bool = rng.gen();
                let q = Rational::new(BigInt::from(num), BigInt::from(den));
                if sign {
                    q
                } else {
                    -q
                }
            }
        }
    }
}

/// A sampled generic element with its coefficient vector retained for
/// reproducibility.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledElement {
    pub poly: QPoly,
    pub coefficients: Vec<Rational>,
    pub seed: u64,
}

impl QSpanSpace {
    /// A generic element Σ c_j P_j. Cancellation between generators is a
    /// measure-zero event for the rational sampler but is still checked:
    /// the support of the result must equal the union of generator
    /// supports, with bounded resampling on mismatch.
    pub fn random_element(
        &self,
        seed: u64,
        sampler: &CoefficientSampler,
    ) -> Result<SampledElement, LaurentError> {
        const MAX_RETRIES: usize = 16;
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let expected = self.support_union();
        for _ in 0..MAX_RETRIES {
            let coefficients: Vec<Rational> =
                (0..self.generators.len()).map(|_| sampler.sample(&mut rng)).collect();
            let mut poly = QPoly::zero(self.n);
            for (c, g) in coefficients.iter().zip(&self.generators) {
                poly = poly.add(&g.scaled(c))?;
            }
            if poly.support() == expected {
                return Ok(SampledElement {
                    poly,
                    coefficients,
                    seed,
                });
            }
        }
        Err(LaurentError::CancellationPersisted {
            retries: MAX_RETRIES,
        })
    }

    /// Newt(L) = conv of the union of generator supports.
    pub fn newton_polytope(&self) -> Result<Polytope<Rational>, LaurentError> {
        let points: Vec<Vec<Rational>> = self
            .support_union()
            .iter()
            .map(|e| e.to_point())
            .collect();
        Ok(Polytope::from_points(self.n, &points)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn ev(e: &[i64]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    #[test]
    fn parse_basic_terms() {
        let f = parse_polynomial("x1 - x1^-1", 1).unwrap();
        assert_eq!(f.coefficient(&ev(&[1])), Some(&q(1)));
        assert_eq!(f.coefficient(&ev(&[-1])), Some(&q(-1)));
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn parse_coupling_shape() {
        // x1/x2 - x2/x1 written with explicit inverse exponents
        let f = parse_polynomial("x1*x2^-1 - x2*x1^-1", 2).unwrap();
        assert_eq!(f.coefficient(&ev(&[1, -1])), Some(&q(1)));
        assert_eq!(f.coefficient(&ev(&[-1, 1])), Some(&q(-1)));
    }

    #[test]
    fn parse_cancellation_gives_zero() {
        let f = parse_polynomial("x1 - x1", 1).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.support(), vec![]);
    }

    #[test]
    fn parse_rich_term() {
        let f = parse_polynomial("3*x1^2*x2^-1 - 5 + x2", 2).unwrap();
        assert_eq!(f.coefficient(&ev(&[2, -1])), Some(&q(3)));
        assert_eq!(f.coefficient(&ev(&[0, 0])), Some(&q(-5)));
        assert_eq!(f.coefficient(&ev(&[0, 1])), Some(&q(1)));
        let g = parse_polynomial("5/3*x1", 1).unwrap();
        assert_eq!(
            g.coefficient(&ev(&[1])),
            Some(&Rational::new(BigInt::from(5), BigInt::from(3)))
        );
    }

    #[test]
    fn parse_errors_report_position() {
        match parse_polynomial("x1 + ?", 1) {
            Err(LaurentError::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_polynomial("x3", 2) {
            Err(LaurentError::VariableOutOfRange { index, n, .. }) => {
                assert_eq!((index, n), (3, 2));
            }
            other => panic!("expected range error, got {other:?}"),
        }
    }

    #[test]
    fn support_examples() {
        let f = parse_polynomial("x1 + 1", 1).unwrap();
        assert_eq!(f.support(), vec![ev(&[0]), ev(&[1])]);
        assert!(QPoly::zero(1).support().is_empty());
    }

    #[test]
    fn initial_form_minimizes() {
        let f = parse_polynomial("x1 + x2 + 1", 2).unwrap();
        let init = f.initial_form(&[q(1), q(0)]).unwrap();
        // values 1, 0, 0 -> argmin keeps x2 and 1
        assert_eq!(init, parse_polynomial("x2 + 1", 2).unwrap());

        let g = parse_polynomial("x1 - x1^-1", 1).unwrap();
        let init_g = g.initial_form(&[q(1)]).unwrap();
        assert_eq!(init_g, parse_polynomial("0 - x1^-1", 1).unwrap());

        // zero direction returns the polynomial unchanged
        assert_eq!(f.initial_form(&[q(0), q(0)]).unwrap(), f);

        assert_eq!(
            QPoly::zero(1).initial_form(&[q(1)]),
            Err(LaurentError::ZeroPolynomial)
        );
    }

    #[test]
    fn monomial_unit_detection() {
        let f = parse_polynomial("3*x1^2*x2^-1", 2).unwrap();
        assert!(f.is_monomial_unit());
        assert!(!parse_polynomial("x1 + 1", 1).unwrap().is_monomial_unit());
        assert!(!QPoly::zero(2).is_monomial_unit());
    }

    #[test]
    fn display_round_trip() {
        for (text, n) in [
            ("3*x1^2*x2^-1 - 5 + x2", 2),
            ("x1 - x1^-1", 1),
            ("0", 3),
            ("1/2 + 7/3*x2^-4", 2),
            ("-x1 - 2", 1),
        ] {
            let f = parse_polynomial(text, n).unwrap();
            let printed = f.to_string();
            let reparsed = parse_polynomial(&printed, n).unwrap();
            assert_eq!(f, reparsed, "round trip failed for {printed}");
        }
    }

    #[test]
    fn random_element_reproducible() {
        let space = SpanSpace::new(
            1,
            vec![
                parse_polynomial("1", 1).unwrap(),
                parse_polynomial("x1", 1).unwrap(),
            ],
        )
        .unwrap();
        let sampler = CoefficientSampler::default();
        let a = space.random_element(7, &sampler).unwrap();
        let b = space.random_element(7, &sampler).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coefficients.len(), 2);
        let c = space.random_element(8, &sampler).unwrap();
        assert_ne!(a.coefficients, c.coefficients);
    }

    #[test]
    fn random_element_no_cancellation_structure() {
        let space = SpanSpace::new(
            1,
            vec![parse_polynomial("x1 - x1^-1", 1).unwrap()],
        )
        .unwrap();
        let e = space
            .random_element(3, &CoefficientSampler::default())
            .unwrap();
        assert_eq!(e.poly.support(), vec![ev(&[-1]), ev(&[1])]);
    }

    #[test]
    fn random_element_generic_survives_many_seeds() {
        // span{x1+x2, x1-x2}: cancellation needs c1 = ±c2, measure zero
        let space = SpanSpace::new(
            2,
            vec![
                parse_polynomial("x1 + x2", 2).unwrap(),
                parse_polynomial("x1 - x2", 2).unwrap(),
            ],
        )
        .unwrap();
        let sampler = CoefficientSampler::default();
        for seed in 0..100 {
            let e = space.random_element(seed, &sampler).unwrap();
            assert_eq!(e.poly.support(), vec![ev(&[0, 1]), ev(&[1, 0])]);
        }
    }

    #[test]
    fn span_space_validation() {
        assert_eq!(
            SpanSpace::<Rational>::new(1, vec![]),
            Err(LaurentError::EmptySpan)
        );
        assert_eq!(
            SpanSpace::new(1, vec![QPoly::zero(1)]),
            Err(LaurentError::ZeroGenerator { index: 0 })
        );
    }
}
