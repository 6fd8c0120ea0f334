//! Exact linear algebra over the rationals.
//!
//! Two structures: [`RowSpace`] keeps a reduced row-echelon basis for rank and
//! membership questions, and [`OrthoBasis`] keeps a Gram–Schmidt basis of
//! primitive integer vectors for orthogonal projection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Subspace of `Q^dim` spanned by the rows inserted so far.
#[derive(Clone, Debug)]
pub struct RowSpace {
    dim: usize,
    /// Fully reduced: each row has a 1 at its pivot and every other row has a 0 there.
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        RowSpace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut v = v;
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn insert_int(&mut self, v: &[i64]) -> bool {
        self.insert(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    pub fn contains_int(&self, v: &[i64]) -> bool {
        self.contains(&v.iter().map(|&x| Rational::from_integer(x.into())).collect::<Vec<_>>())
    }

    /// Integer vectors spanning the orthogonal complement.
    pub fn annihilator(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        let mut pivot_iter = self.pivots.iter().peekable();
        for free in 0..self.dim {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            // x_free = 1, x_pivot(k) = -row_k[free]: kills every row
            let mut y = vec![Rational::zero(); self.dim];
            y[free] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                y[p] = -row[free].clone();
            }
            out.push(primitive(&y));
        }
        out
    }
}

/// Scale a rational vector to a primitive integer vector (same direction).
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Membership test against a fixed subspace using its annihilator.
#[derive(Clone, Debug)]
pub struct SpanTest {
    dim: usize,
    rank: usize,
    annihilator: Vec<Vec<BigInt>>,
}

impl SpanTest {
    pub fn new(space: &RowSpace) -> Self {
        SpanTest { dim: space.dim(), rank: space.rank(), annihilator: space.annihilator() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether the 0/1 vector with the given support lies in the subspace.
    pub fn contains_support(&self, support: impl Fn(usize) -> bool) -> bool {
        let ones: Vec<usize> = (0..self.dim).filter(|&k| support(k)).collect();
        self.annihilator.iter().all(|y| ones.iter().map(|&k| &y[k]).sum::<BigInt>().is_zero())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.annihilator.iter().all(|y| {
            y.iter()
                .zip(v)
                .filter(|(a, _)| !a.is_zero())
                .map(|(a, x)| x * Rational::from_integer(a.clone()))
                .sum::<Rational>()
                .is_zero()
        })
    }
}

/// Orthogonal basis of primitive integer vectors, built by exact
/// fraction-free Gram–Schmidt.
#[derive(Clone, Debug, Default)]
pub struct OrthoBasis {
    dim: usize,
    vectors: Vec<Vec<BigInt>>,
    norms: Vec<BigInt>,
}

impl OrthoBasis {
    pub fn new(dim: usize) -> Self {
        OrthoBasis { dim, vectors: Vec::new(), norms: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    /// Orthogonalises `v` against the basis and keeps it if nonzero.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut w: Vec<BigInt> = v.to_vec();
        for (b, nb) in self.vectors.iter().zip(&self.norms) {
            let c = dot_int(&w, b);
            if c.is_zero() {
                continue;
            }
            // w <- nb * w - c * b, then strip content
            for (x, y) in w.iter_mut().zip(b) {
                *x = &*x * nb - &c * y;
            }
            strip_content(&mut w);
        }
        if w.iter().all(Zero::is_zero) {
            return false;
        }
        let norm = dot_int(&w, &w);
        self.vectors.push(w);
        self.norms.push(norm);
        true
    }

    pub fn insert_i64(&mut self, v: &[i64]) -> bool {
        self.insert(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    /// Orthogonal projection of an integer vector.
    pub fn project(&self, f: &[BigInt]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (b, nb) in self.vectors.iter().zip(&self.norms) {
            let c = dot_int(f, b);
            if c.is_zero() {
                continue;
            }
            let coef = Rational::new(c, nb.clone());
            for (o, y) in out.iter_mut().zip(b) {
                if !y.is_zero() {
                    *o += &coef * Rational::from_integer(y.clone());
                }
            }
        }
        out
    }

    /// `‖proj f‖²`, computed without materialising the projection.
    pub fn projected_norm_sq(&self, f: &[BigInt]) -> Rational {
        self.vectors
            .iter()
            .zip(&self.norms)
            .map(|(b, nb)| {
                let c = dot_int(f, b);
                Rational::new(&c * &c, nb.clone())
            })
            .sum()
    }
}

fn strip_content(w: &mut [BigInt]) {
    let g = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in w.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub fn rational_dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_rational(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

pub fn to_bigint(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Render as `p/q` (or `p` for integers).
pub fn rational_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integer_valued(v: &[Rational]) -> bool {
    v.iter().all(|x| x.denom().is_one() || x.numer().is_zero())
}

pub fn max_abs(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_membership() {
        let mut s = RowSpace::new(3);
        assert!(s.insert_int(&[1, 1, 0]));
        assert!(s.insert_int(&[0, 1, 1]));
        assert!(!s.insert_int(&[1, 2, 1]));
        assert_eq!(s.rank(), 2);
        assert!(s.contains_int(&[2, 0, -2]));
        assert!(!s.contains_int(&[1, 0, 0]));
        let t = SpanTest::new(&s);
        assert_eq!(t.rank(), 2);
        assert!(t.contains_support(|k| k != 2)); // (1,1,0)
        assert!(!t.contains_support(|k| k == 0));
        assert!(t.contains(&to_rational(&[1, -1, -2])));
    }

    #[test]
    fn annihilator_is_orthogonal() {
        let mut s = RowSpace::new(4);
        s.insert_int(&[1, 2, 3, 4]);
        s.insert_int(&[0, 1, 0, 1]);
        let ann = s.annihilator();
        assert_eq!(ann.len(), 2);
        for y in &ann {
            assert!(dot_int(y, &to_bigint(&[1, 2, 3, 4])).is_zero());
            assert!(dot_int(y, &to_bigint(&[0, 1, 0, 1])).is_zero());
        }
    }

    #[test]
    fn gram_schmidt_projection() {
        let mut b = OrthoBasis::new(3);
        assert!(b.insert_i64(&[1, 1, 0]));
        assert!(b.insert_i64(&[1, 0, 0]));
        assert!(!b.insert_i64(&[3, 2, 0]));
        assert_eq!(b.rank(), 2);
        let f = to_bigint(&[5, 7, 9]);
        let p = b.project(&f);
        assert_eq!(p, to_rational(&[5, 7, 0]));
        assert_eq!(b.projected_norm_sq(&f), Rational::from_integer(74.into()));
        let v = b.vectors();
        assert!(dot_int(&v[0], &v[1]).is_zero());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&Rational::new(6.into(), 4.into())), "3/2");
        assert_eq!(rational_string(&Rational::from_integer(5.into())), "5");
    }
}
