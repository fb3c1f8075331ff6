//! Exact coefficient fields: prime fields `F_p` with word-sized moduli and the
//! rationals backed by arbitrary-precision integers.
//!
//! Every algorithm in the crate is generic over [`Field`], a *context* type
//! (the field itself) whose associated [`Field::Elem`] carries the values.
//! Keeping the modulus in the context rather than in every element keeps
//! polynomial terms small; the standalone [`FpElem`] type bundles the modulus
//! for callers that want self-describing values.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

/// Default characteristic used throughout the crate.
pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed fields: F_{0} and F_{1}")]
    MixedFields(u32, u32),
    #[error("modulus {0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("cannot parse coefficient `{0}`")]
    Parse(String),
    #[error("denominator {den} is not invertible in F_{p}")]
    NotInvertible { den: String, p: u32 },
}

/// A field together with the arithmetic on its elements.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ArithError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, ArithError>;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// Uniform element for prime fields; a small integer for the rationals.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn format(&self, a: &Self::Elem) -> String;

    /// Short name used in reports, e.g. `F_32003` or `Q`.
    fn name(&self) -> String;

    /// Scalar that turns the coefficient list into its display-normal form:
    /// monic over `F_p`, integral and primitive with positive leading
    /// coefficient over `Q`. The list must be nonempty with a nonzero head.
    fn normalizing_factor(&self, coeffs: &[&Self::Elem]) -> Self::Elem {
        self.inv(coeffs[0]).expect("leading coefficient is nonzero")
    }
}

/// Elementary field operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

/// Applies a single field operation. Binary operations require `y`.
pub fn field_arith<F: Field>(
    field: &F,
    op: FieldOp,
    x: &F::Elem,
    y: Option<&F::Elem>,
) -> Result<F::Elem, ArithError> {
    let rhs = || y.ok_or_else(|| ArithError::Parse("missing second operand".into()));
    Ok(match op {
        FieldOp::Add => field.add(x, rhs()?),
        FieldOp::Sub => field.sub(x, rhs()?),
        FieldOp::Mul => field.mul(x, rhs()?),
        FieldOp::Neg => field.neg(x),
        FieldOp::Inv => field.inv(x)?,
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `Z/pZ` with `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(ArithError::InvalidModulus(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: i64) -> FpElem {
        FpElem {
            value: self.from_i64(v),
            modulus: self.p,
        }
    }

    fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Result<u32, ArithError> {
        if *a == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.pow(*a, self.p as u64 - 2))
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u32, ArithError> {
        let p = BigInt::from(self.p);
        let n = num.mod_floor(&p).to_u32().unwrap();
        let d = den.mod_floor(&p).to_u32().unwrap();
        if d == 0 {
            return Err(ArithError::NotInvertible {
                den: den.to_string(),
                p: self.p,
            });
        }
        Ok(self.mul(&n, &self.inv(&d)?))
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u32) -> String {
        // Symmetric representatives read better: p-1 prints as -1.
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

/// A self-describing element of a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElem {
    value: u32,
    modulus: u32,
}

impl FpElem {
    pub fn new(value: i64, field: PrimeField) -> Self {
        field.elem(value)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    fn field_with(&self, other: &FpElem) -> Result<PrimeField, ArithError> {
        if self.modulus != other.modulus {
            return Err(ArithError::MixedFields(self.modulus, other.modulus));
        }
        Ok(PrimeField { p: self.modulus })
    }

    fn wrap(&self, value: u32) -> FpElem {
        FpElem {
            value,
            modulus: self.modulus,
        }
    }

    pub fn add(&self, other: &FpElem) -> Result<FpElem, ArithError> {
        let f = self.field_with(other)?;
        Ok(self.wrap(f.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &FpElem) -> Result<FpElem, ArithError> {
        let f = self.field_with(other)?;
        Ok(self.wrap(f.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &FpElem) -> Result<FpElem, ArithError> {
        let f = self.field_with(other)?;
        Ok(self.wrap(f.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> FpElem {
        self.wrap(PrimeField { p: self.modulus }.neg(&self.value))
    }

    pub fn inv(&self) -> Result<FpElem, ArithError> {
        Ok(self.wrap(PrimeField { p: self.modulus }.inv(&self.value)?))
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

/// Canonical rational number: reduced, positive denominator, zero is `0/1`.
pub type Rational = BigRational;

/// Parses `n` or `n/d` into canonical form.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let err = || ArithError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| err())?,
        )),
    }
}

/// Prints a rational as `n` or `n/d`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Result<Rational, ArithError> {
        if a.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Rational, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational::new(num.clone(), den.clone()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        self.from_i64(rng.gen_range(-64..=64))
    }
    fn format(&self, a: &Rational) -> String {
        format_rational(a)
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
    fn normalizing_factor(&self, coeffs: &[&Rational]) -> Rational {
        // lcm of denominators, divided by gcd of the cleared numerators
        let mut lcm = BigInt::one();
        for c in coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in coeffs {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
        }
        let mut factor = Rational::new(lcm, g);
        if coeffs[0].is_negative() {
            factor = -factor;
        }
        factor
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_two_mod_seven() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(&2).unwrap(), 4);
        assert_eq!(f7.elem(2).inv().unwrap().value(), 4);
    }

    #[test]
    fn rational_sum() {
        let q = Rationals;
        let a = parse_rational("1/2").unwrap();
        let b = parse_rational("1/3").unwrap();
        assert_eq!(format_rational(&q.add(&a, &b)), "5/6");
    }

    #[test]
    fn default_prime_product() {
        let f = PrimeField::default();
        assert_eq!(f.mul(&16001, &2), 32002);
        let x = f.elem(16001);
        assert_eq!(x.mul(&f.elem(2)).unwrap().value(), 32002);
    }

    #[test]
    fn errors() {
        let f = PrimeField::default();
        assert_eq!(f.inv(&0), Err(ArithError::DivisionByZero));
        let a = PrimeField::new(7).unwrap().elem(3);
        let b = PrimeField::new(11).unwrap().elem(3);
        assert_eq!(a.add(&b), Err(ArithError::MixedFields(7, 11)));
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(Rationals.inv(&Rational::zero()).is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(
            field_arith(&f, FieldOp::Inv, &0, None),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn rational_canonical_form() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational("0/5").unwrap()), "0");
    }

    #[test]
    fn normalizing_factor_over_q() {
        let q = Rationals;
        let c = [parse_rational("-1/2").unwrap(), parse_rational("1/3").unwrap()];
        let refs: Vec<&Rational> = c.iter().collect();
        let k = q.normalizing_factor(&refs);
        // -1/2 x + 1/3 y  ->  3x - 2y
        assert_eq!(format_rational(&(&c[0] * &k)), "3");
        assert_eq!(format_rational(&(&c[1] * &k)), "-2");
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
            let f = PrimeField::default();
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }

        #[test]
        fn rational_axioms(n1 in -50i64..50, d1 in 1i64..50, n2 in -50i64..50, d2 in 1i64..50) {
            let q = Rationals;
            let a = Rational::new(n1.into(), d1.into());
            let b = Rational::new(n2.into(), d2.into());
            prop_assert_eq!(q.mul(&a, &q.add(&a, &b)), q.add(&q.mul(&a, &a), &q.mul(&a, &b)));
            if !a.is_zero() {
                prop_assert!(q.is_one(&q.mul(&a, &q.inv(&a).unwrap())));
            }
        }

        #[test]
        fn rational_text_roundtrip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let a = Rational::new(n.into(), d.into());
            let s = format_rational(&a);
            let b = parse_rational(&s).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(format_rational(&b), s);
        }
    }
}
