//! Dense univariate polynomials over the active field: just enough for
//! minimal polynomials and coprime splitting of them.

use crate::exactlin::{Field, Scalar};

/// Coefficients in increasing degree, normalized (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Poly { coeffs: vec![field.one()] }
    }

    pub fn constant(field: Field, c: Scalar) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self, field: Field) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| field.zero())
    }

    pub fn monic(&self, field: Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = field.inv(&self.leading(field));
        Poly { coeffs: self.coeffs.iter().map(|c| field.mul(&inv, c)).collect() }
    }

    pub fn add(&self, field: Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero());
                let b = other.coeffs.get(i).cloned().unwrap_or_else(|| field.zero());
                field.add(&a, &b)
            })
            .collect();
        Poly::new(field, coeffs)
    }

    pub fn sub(&self, field: Field, other: &Poly) -> Poly {
        self.add(field, &other.scale(field, &field.from_i64(-1)))
    }

    pub fn scale(&self, field: Field, c: &Scalar) -> Poly {
        Poly::new(field, self.coeffs.iter().map(|a| field.mul(c, a)).collect())
    }

    pub fn mul(&self, field: Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(&coeffs[i + j], &field.mul(a, b));
            }
        }
        Poly::new(field, coeffs)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`
    /// (or `r = 0`).
    pub fn divmod(&self, field: Field, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dlead_inv = field.inv(&div.leading(field));
        let mut rem = self.coeffs.clone();
        let dd = div.coeffs.len() - 1;
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![field.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = field.mul(&rem[top], &dlead_inv);
            if field.is_zero(&c) {
                continue;
            }
            quo[top - dd] = c.clone();
            for (k, b) in div.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                rem[idx] = field.sub(&rem[idx], &field.mul(&c, b));
            }
        }
        (Poly::new(field, quo), Poly::new(field, rem))
    }

    pub fn eval(&self, field: Field, x: &Scalar) -> Scalar {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    pub fn derivative(&self, field: Field) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| field.mul(&field.from_i64(i as i64 + 1), c))
            .collect();
        Poly::new(field, coeffs)
    }

    pub fn pow(&self, field: Field, mut e: usize) -> Poly {
        let mut acc = Poly::one(field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base);
            }
            base = base.mul(field, &base);
            e >>= 1;
        }
        acc
    }
}

/// Monic gcd.
pub fn gcd(field: Field, a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.divmod(field, &b);
        a = b;
        b = r;
    }
    a.monic(field)
}

/// Extended Euclid: returns `(g, u, v)` with `u a + v b = g`, `g` monic.
pub fn extended_gcd(field: Field, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(field), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(field, &r1);
        let s = s0.sub(field, &q.mul(field, &s1));
        let t = t0.sub(field, &q.mul(field, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    if r0.is_zero() {
        return (Poly::zero(), s0, t0);
    }
    let c = field.inv(&r0.leading(field));
    (r0.scale(field, &c), s0.scale(field, &c), t0.scale(field, &c))
}

/// Find a nontrivial coprime factorization `mu = f * g` with
/// `gcd(f, g) = 1` and both factors nonconstant. Strategies: split off
/// the full power of a found root, separate the squarefree part, or
/// unwrap a pure p-th power over `F_p`. Returns `None` when none apply
/// (in particular for prime powers).
pub fn split_coprime(field: Field, mu: &Poly) -> Option<(Poly, Poly)> {
    let mu = mu.monic(field);
    if mu.degree() < 2 {
        return None;
    }
    let mut candidates: Vec<Scalar> = vec![field.zero()];
    match field {
        Field::Fp(p) if p <= 10_000 => candidates.extend((1..p).map(|i| field.element(i))),
        Field::Fp(_) => candidates.extend((1..200u64).map(|i| field.from_i64(i as i64))),
        Field::Rational => {
            for n in -12i64..=12 {
                if n != 0 {
                    candidates.push(field.from_i64(n));
                }
                candidates.push(field.parse_scalar(&format!("{}/2", 2 * n + 1)).unwrap());
            }
        }
    }
    for lambda in candidates {
        if !field.is_zero(&mu.eval(field, &lambda)) {
            continue;
        }
        let lin = Poly::new(field, vec![field.neg(&lambda), field.one()]);
        let mut f = Poly::one(field);
        let mut h = mu.clone();
        loop {
            let (q, r) = h.divmod(field, &lin);
            if !r.is_zero() {
                break;
            }
            f = f.mul(field, &lin);
            h = q;
        }
        if !h.is_constant() {
            return Some((f, h.monic(field)));
        }
    }
    let deriv = mu.derivative(field);
    if deriv.is_zero() {
        // char p with mu = nu(t^p) = nu(t)^p over the prime field
        if let Field::Fp(p) = field {
            let p = p as usize;
            let nu = Poly::new(
                field,
                (0..=mu.degree() / p).map(|i| mu.coeffs[i * p].clone()).collect(),
            );
            let (f, g) = split_coprime(field, &nu)?;
            return Some((f.pow(field, p), g.pow(field, p)));
        }
        return None;
    }
    let d = gcd(field, &mu, &deriv);
    if !d.is_constant() && d.degree() < mu.degree() {
        if let Some(split) = saturate_split(field, &mu, &d) {
            return Some(split);
        }
    }
    // distinct-factor detection on the squarefree part, small fields only
    if let Field::Fp(p) = field {
        if p <= 10_000 {
            let (w, r) = mu.divmod(field, &gcd(field, &mu, &deriv));
            debug_assert!(r.is_zero());
            if !w.is_constant() {
                if let Some((f, _)) = berlekamp_split(field, p, &w.monic(field)) {
                    if let Some(split) = saturate_split(field, &mu, &f) {
                        return Some(split);
                    }
                }
            }
        }
    }
    None
}

/// Grow a proper divisor `f` of `mu` until it is coprime to the
/// cofactor; `None` when it swallows all of `mu`.
fn saturate_split(field: Field, mu: &Poly, f0: &Poly) -> Option<(Poly, Poly)> {
    let mut f = f0.clone();
    loop {
        let (g, r) = mu.divmod(field, &f);
        debug_assert!(r.is_zero());
        if g.is_constant() {
            return None;
        }
        let c = gcd(field, &f, &g);
        if c.is_constant() {
            return Some((f.monic(field), g.monic(field)));
        }
        f = f.mul(field, &c);
    }
}

/// Berlekamp splitting of a squarefree monic polynomial over a small
/// prime field: a proper factor when at least two irreducible factors
/// exist, `None` when irreducible.
fn berlekamp_split(field: Field, p: u64, sigma: &Poly) -> Option<(Poly, Poly)> {
    use crate::exactlin::Matrix;
    let d = sigma.degree();
    if d < 2 {
        return None;
    }
    // matrix of Frobenius minus identity on F_p[t]/sigma
    let mut frob = Matrix::zero(field, d, d);
    for i in 0..d {
        let tpi = Poly::new(field, {
            let mut c = vec![field.zero(); (i * p as usize) + 1];
            let n = c.len();
            c[n - 1] = field.one();
            c
        });
        let (_, rem) = tpi.divmod(field, sigma);
        for r in 0..d {
            let mut v = rem.coeffs.get(r).cloned().unwrap_or_else(|| field.zero());
            if r == i {
                v = field.sub(&v, &field.one());
            }
            frob.set(r, i, v);
        }
    }
    let null = frob.nullspace();
    if null.cols() < 2 {
        return None;
    }
    for c in 0..null.cols() {
        let v = Poly::new(field, (0..d).map(|r| null.get(r, c).clone()).collect());
        if v.is_constant() {
            continue;
        }
        for lam in 0..p {
            let shifted = v.sub(field, &Poly::constant(field, field.element(lam)));
            let g = gcd(field, sigma, &shifted);
            if !g.is_constant() && g.degree() < sigma.degree() {
                let (h, r) = sigma.divmod(field, &g);
                debug_assert!(r.is_zero());
                return Some((g, h.monic(field)));
            }
        }
    }
    None
}
