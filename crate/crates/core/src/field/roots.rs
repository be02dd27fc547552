//! Roots of univariate polynomials that lie in the coefficient field.
//!
//! Over `Q` roots are isolated exactly and checked. Over `Q(t)` a root is found by
//! clearing denominators, making the polynomial monic over `Q[t]` (where every
//! `Q(t)`-root of a monic polynomial is a polynomial), and lifting each simple
//! rational root at a good specialization point `t0` as a power series in
//! `t - t0` up to the a-priori degree bound. Each lifted candidate is checked
//! exactly, so no root is reported unless it is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Poly, RatFunc, Rational};

/// Distinct rational roots of `p`, ascending. The zero polynomial has none.
///
/// Real roots of the square-free part are isolated with a Sturm sequence.
/// With `a_d` the leading coefficient of the primitive integer form, every
/// rational root is an integer multiple of `1/a_d`, so an isolating interval
/// shorter than `1/a_d` holds at most one candidate, which is checked exactly.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    if p.is_constant() {
        return Vec::new();
    }
    let ints = integer_coefficients(&p.square_free());
    let sf = Poly::new(ints.iter().cloned().map(Rational::from_bigint).collect());
    let ad = ints.last().unwrap().abs();
    let scale = Rational::from_bigint(ad.clone());

    let chain = sturm_chain(&sf);
    let bound = cauchy_bound(&sf);
    let mut roots = Vec::new();
    let mut stack =
        vec![(bound.neg(), sign_changes(&chain, &bound.neg()), bound.clone(), sign_changes(&chain, &bound))];
    while let Some((lo, vlo, hi, vhi)) = stack.pop() {
        if vlo == vhi {
            continue;
        }
        if hi.sub(&lo).mul(&scale) < 1 {
            // lo < k/a_d <= hi
            let k_lo = floor(&lo.mul(&scale)) + 1;
            let k_hi = floor(&hi.mul(&scale));
            let mut k = k_lo;
            while k <= k_hi {
                if is_integer_root(&ints, &k, &ad) {
                    roots.push(Rational::new(k.clone(), ad.clone()).unwrap());
                }
                k += 1;
            }
            continue;
        }
        let mid = lo.add(&hi).mul(&Rational::new_i64(1, 2).unwrap());
        let vmid = sign_changes(&chain, &mid);
        stack.push((lo, vlo, mid.clone(), vmid));
        stack.push((mid, vmid, hi, vhi));
    }
    roots.sort();
    roots.dedup();
    roots
}

fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

fn sturm_chain(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        // Positive rescaling keeps signs and tames coefficient growth.
        let lead = r.leading().unwrap().abs();
        chain.push(r.neg().scale(&lead.inv().unwrap()));
    }
}

fn sign_changes(chain: &[Poly<Rational>], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in chain {
        let v = s.eval(x);
        let sign = if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        };
        if sign != 0 {
            if last != 0 && sign != last {
                count += 1;
            }
            last = sign;
        }
    }
    count
}

/// `1 + max |a_i / a_d|`, a strict bound on the modulus of every root.
fn cauchy_bound(p: &Poly<Rational>) -> Rational {
    let lead = p.leading().unwrap().abs();
    let d = p.degree().unwrap();
    let m = p.coeffs()[..d].iter().map(|c| c.abs().div(&lead).unwrap()).max().unwrap_or_else(Rational::zero);
    Rational::from_bigint(floor(&m) + 2)
}

/// Primitive integer polynomial proportional to `p`.
fn integer_coefficients(p: &Poly<Rational>) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &content).collect()
    }
}

/// `sum a_i num^i den^(d-i) == 0`.
fn is_integer_root(a: &[BigInt], num: &BigInt, den: &BigInt) -> bool {
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for c in a.iter().rev() {
        acc = acc * num + c * &den_pow;
        den_pow *= den;
    }
    acc.is_zero()
}

/// Distinct roots of `p` in `Q(t)`, in a deterministic order.
pub fn ratfunc_roots(p: &Poly<RatFunc>) -> Vec<RatFunc> {
    if p.is_constant() {
        return Vec::new();
    }
    // Clear denominators: b_i in Q[t], then drop repeated factors.
    let lcm = p.coeffs().iter().fold(Poly::<Rational>::one(), |acc, c| {
        let g = acc.gcd(c.denom());
        acc.mul(&c.denom().exact_div(&g).unwrap())
    });
    let b: Vec<Poly<Rational>> =
        p.coeffs().iter().map(|c| c.numer().mul(&lcm.exact_div(c.denom()).unwrap())).collect();
    let b = square_free_qt(&b);
    let d = b.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = b[d].clone();

    // mu = lead * lambda turns the polynomial monic over Q[t].
    let mut c: Vec<Poly<Rational>> = Vec::with_capacity(d + 1);
    for (i, bi) in b.iter().enumerate() {
        if i == d {
            c.push(Poly::one());
        } else {
            c.push(bi.mul(&lead.pow((d - 1 - i) as u32)));
        }
    }
    let bound = c[..d].iter().filter_map(Poly::degree).max().unwrap_or(0);

    let Some((t0, roots0)) = good_point(&c) else {
        return Vec::new();
    };
    let shift = Poly::new(vec![t0.clone(), Rational::one()]);
    let shifted: Vec<Poly<Rational>> = c.iter().map(|ci| ci.compose(&shift)).collect();
    let back = Poly::new(vec![t0.neg(), Rational::one()]);

    let mut out = Vec::new();
    for mu0 in roots0 {
        let series = lift_root(&shifted, &mu0, bound);
        let mu = Poly::new(series).compose(&back);
        if eval_over_qt(&c, &mu).is_zero() {
            let lambda = RatFunc::new(mu, lead.clone()).expect("leading coefficient nonzero");
            out.push(lambda);
        }
    }
    out
}

/// Polynomials in `lambda` over `Q[t]`, lowest degree first, trimmed.
type QtPoly = Vec<Poly<Rational>>;

fn trim(mut p: QtPoly) -> QtPoly {
    while p.last().is_some_and(Poly::is_zero) {
        p.pop();
    }
    p
}

/// Divide out the `Q[t]` content and the rational content so coefficients
/// stay small. The result is associate to `p` over `Q(t)`.
fn primitive(p: QtPoly) -> QtPoly {
    let p = trim(p);
    if p.is_empty() {
        return p;
    }
    let content = p.iter().fold(Poly::zero(), |acc: Poly<Rational>, c| acc.gcd(c));
    let mut p: QtPoly =
        if content.is_constant() { p } else { p.iter().map(|c| c.exact_div(&content).unwrap()).collect() };
    let all = p.iter().flat_map(|c| c.coeffs().iter());
    let (num_gcd, den_lcm) =
        all.fold((BigInt::zero(), BigInt::one()), |(g, l), q| (g.gcd(q.numer()), l.lcm(q.denom())));
    let mut factor = Rational::new(den_lcm, num_gcd).unwrap();
    if p.last().unwrap().leading().unwrap().is_negative() {
        factor = factor.neg();
    }
    if !factor.is_one() {
        p = p.iter().map(|c| c.scale(&factor)).collect();
    }
    p
}

/// Pseudo-division `lc(b)^k a = q b + r`; returns `(q, r)`.
fn pseudo_div(a: &QtPoly, b: &QtPoly) -> (QtPoly, QtPoly) {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut q: QtPoly = vec![Poly::zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in q.iter_mut() {
            *c = c.mul(lb);
        }
        q[shift] = q[shift].add(&lr);
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub(&lr.mul(bj));
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// Gcd over `Q(t)` by the primitive remainder sequence.
fn gcd_qt(a: &QtPoly, b: &QtPoly) -> QtPoly {
    let (mut a, mut b) = (primitive(a.clone()), primitive(b.clone()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let (_, r) = pseudo_div(&a, &b);
        a = b;
        b = primitive(r);
    }
    a
}

/// Square-free part over `Q(t)`, up to a unit.
fn square_free_qt(p: &QtPoly) -> QtPoly {
    let p = primitive(p.clone());
    if p.len() <= 1 {
        return p;
    }
    let deriv: QtPoly =
        p.iter().enumerate().skip(1).map(|(k, c)| c.scale(&Rational::from_integer(k as i64))).collect();
    let g = gcd_qt(&p, &deriv);
    if g.len() <= 1 {
        return p;
    }
    let (q, r) = pseudo_div(&p, &g);
    debug_assert!(r.is_empty());
    primitive(q)
}

/// First integer point `t0` (0, 1, -1, 2, ...) at which the specialized monic
/// polynomial stays square-free, with its rational roots there.
fn good_point(c: &[Poly<Rational>]) -> Option<(Rational, Vec<Rational>)> {
    for k in 0..2000i64 {
        let t0 = Rational::from_integer(if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) });
        let spec = Poly::new(c.iter().map(|ci| ci.eval(&t0)).collect());
        if spec.gcd(&spec.derivative()).is_constant() {
            return Some((t0.clone(), rational_roots(&spec)));
        }
    }
    None
}

fn truncated_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// Power-series root of `sum shifted_i(s) mu^i` through `s^bound`, starting
/// from a simple root `mu0` at `s = 0`.
fn lift_root(shifted: &[Poly<Rational>], mu0: &Rational, bound: usize) -> Vec<Rational> {
    let d = shifted.len() - 1;
    let at0: Vec<Rational> = shifted.iter().map(|ci| ci.coeff(0)).collect();
    let deriv = (1..=d).fold(Rational::zero(), |acc, i| {
        acc.add(&at0[i].mul(&Rational::from_integer(i as i64)).mul(&mu0.pow(i as u32 - 1)))
    });
    let deriv_inv = deriv.inv().expect("simple root has nonzero derivative");

    let mut mu = vec![mu0.clone()];
    for j in 1..=bound {
        let len = j + 1;
        let mut acc: Vec<Rational> = vec![Rational::zero(); len];
        for ci in shifted.iter().rev() {
            acc = truncated_mul(&acc, &mu, len);
            for (k, slot) in acc.iter_mut().enumerate() {
                *slot = slot.add(&ci.coeff(k));
            }
        }
        mu.push(acc[j].neg().mul(&deriv_inv));
    }
    mu
}

fn eval_over_qt(c: &[Poly<Rational>], mu: &Poly<Rational>) -> Poly<Rational> {
    c.iter().rev().fold(Poly::zero(), |acc, ci| acc.mul(mu).add(ci))
}
