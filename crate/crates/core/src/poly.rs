//! Sparse polynomials in `x_1, x_2, ...` and `y_1, y_2, ...` with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vectors for the `x` and `y` blocks, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    x: Vec<u32>,
    y: Vec<u32>,
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

// graded reverse lexicographic comparison of two exponent vectors of equal degree
fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    for k in (0..n).rev() {
        let (p, q) = (a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0));
        if p != q {
            // smaller exponent in the last differing variable is the larger monomial
            return q.cmp(&p);
        }
    }
    Ordering::Equal
}

impl Monomial {
    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Self {
        Monomial { x: trim(x), y: trim(y) }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    /// `x_i`, 1-based.
    pub fn x(i: usize) -> Self {
        let mut x = vec![0; i];
        x[i - 1] = 1;
        Monomial { x, y: vec![] }
    }

    /// `y_j`, 1-based.
    pub fn y(j: usize) -> Self {
        let mut y = vec![0; j];
        y[j - 1] = 1;
        Monomial { x: vec![], y }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn y_exponents(&self) -> &[u32] {
        &self.y
    }

    pub fn x_exp(&self, i: usize) -> u32 {
        self.x.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let add = |a: &[u32], b: &[u32]| {
            let n = a.len().max(b.len());
            (0..n).map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0)).collect()
        };
        Monomial { x: add(&self.x, &other.x), y: add(&self.y, &other.y) }
    }

    fn with_x(&self, i: usize, a: u32, b: u32) -> Self {
        let mut x = self.x.clone();
        if x.len() < i + 1 {
            x.resize(i + 1, 0);
        }
        x[i - 1] = a;
        x[i] = b;
        Monomial { x: trim(x), y: self.y.clone() }
    }
}

impl Ord for Monomial {
    /// Display order: total degree descending, then graded reverse lex on `x`, then on `y`.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| {
                let (dx, ex) = (self.x.iter().sum::<u32>(), other.x.iter().sum::<u32>());
                ex.cmp(&dx)
            })
            .then_with(|| grevlex(&self.x, &other.x).reverse())
            .then_with(|| grevlex(&self.y, &other.y).reverse())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, exps) in [("x", &self.x), ("y", &self.y)] {
            for (k, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{name}{}", k + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn x(i: usize) -> Self {
        Self::term(Monomial::x(i), BigRational::one())
    }

    pub fn y(j: usize) -> Self {
        Self::term(Monomial::y(j), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Terms in display order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Product of the given factors.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        factors.into_iter().fold(Polynomial::one(), |acc, f| &acc * f)
    }

    /// Substitutes every `x_i` by `value` and every `y_j` by zero.
    pub fn principal_specialization(&self, value: &BigRational) -> BigRational {
        self.terms
            .iter()
            .filter(|(m, _)| m.y.is_empty())
            .map(|(m, c)| {
                let d = m.x.iter().sum::<u32>();
                c * num_traits::pow(value.clone(), d as usize)
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Drops every term involving a `y` variable.
    pub fn y_to_zero(&self) -> Self {
        Polynomial { terms: self.terms.iter().filter(|(m, _)| m.y.is_empty()).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Swaps `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.with_x(i, m.x_exp(i + 1), m.x_exp(i)), c.clone());
        }
        out
    }

    /// `(f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
    pub fn divided_difference(&self, i: usize) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (a, b) = (m.x_exp(i), m.x_exp(i + 1));
            match a.cmp(&b) {
                Ordering::Equal => {}
                Ordering::Greater => {
                    for k in 0..a - b {
                        out.add_term(m.with_x(i, a - 1 - k, b + k), c.clone());
                    }
                }
                Ordering::Less => {
                    for k in 0..b - a {
                        out.add_term(m.with_x(i, a + k, b - 1 - k), -c.clone());
                    }
                }
            }
        }
        out
    }

    /// `[{"coeff": "p/q", "expo_x": [..], "expo_y": [..]}, ...]` in display order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut list: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        list.sort_by(|a, b| a.0.cmp(b.0));
        serde_json::Value::Array(
            list.into_iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "coeff": c.to_string(),
                        "expo_x": m.x,
                        "expo_y": m.y,
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// `p/q` as a rational.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::x(i)
    }

    #[test]
    fn display_order() {
        let p = &(&x(2) + &x(1)) * &(&(&x(3) + &x(1)) + &x(2));
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 + x2^2 + x1*x3 + x2*x3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::one().to_string(), "1");
        let q = &(&x(1).scale(&ratio(2, 1)) - &Polynomial::one()) + &(&x(1) * &x(1)).scale(&ratio(-1, 2));
        assert_eq!(q.to_string(), "-1/2*x1^2 + 2*x1 - 1");
        let d = &x(1) - &Polynomial::y(1);
        assert_eq!(d.to_string(), "x1 - y1");
    }

    #[test]
    fn json_shape() {
        let p = &x(1) * &Polynomial::y(2);
        assert_eq!(p.to_json().to_string(), r#"[{"coeff":"1","expo_x":[1],"expo_y":[0,1]}]"#);
    }

    #[test]
    fn specialization() {
        assert_eq!(Polynomial::one().principal_specialization(&ratio(1, 1)), ratio(1, 1));
        let p = &x(1) * &(&x(2) + &x(1));
        assert_eq!(p.principal_specialization(&ratio(1, 2)), ratio(1, 2));
    }

    // (f - s_i f) / (x_i - x_{i+1}) checked by multiplying back
    fn check_dd(f: &Polynomial, i: usize) -> bool {
        let g = f.divided_difference(i);
        let lhs = f - &f.swap_x(i);
        let rhs = &g * &(&x(i) - &x(i + 1));
        lhs == rhs
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, 0..4), -5i64..5), 0..6).prop_map(|terms| {
            let mut p = Polynomial::zero();
            for (e, c) in terms {
                p.add_term(Monomial::new(e, vec![]), ratio(c, 1));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn divided_difference_is_exact(f in arb_poly(), i in 1usize..4) {
            prop_assert!(check_dd(&f, i));
        }

        #[test]
        fn divided_difference_squares_to_zero(f in arb_poly(), i in 1usize..4) {
            prop_assert!(f.divided_difference(i).divided_difference(i).is_zero());
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }
    }
}
