//! The sequences `C_i`, `R_i` of a cycling orbit, their products, the
//! absolute initial and final factors, and rigidity.

use num_rational::Ratio;

use crate::conjugacy::{cycling_orbit, is_in_uss};
use crate::error::{GarsideError, Result};
use crate::normal_form::NormalForm;
use crate::structure::GarsideStructure;

/// Exact rigidity value `k/r`.
pub type Rational = Ratio<u32>;

/// Cycling data of an element `Y` in its ultra summit set:
/// `c^{i-1}(Y) = C_i Δ^p R_i` with `C_i = ι(c^{i-1}(Y))`.
///
/// Both sequences are periodic, so they accept any integer index.
#[derive(Clone, Debug)]
pub struct CyclingRecord<G: GarsideStructure> {
    base: NormalForm<G>,
    orbit: Vec<NormalForm<G>>,
    c: Vec<G::Simple>,
    r: Vec<NormalForm<G>>,
    p: i64,
}

impl<G: GarsideStructure> CyclingRecord<G> {
    pub fn new(y: &NormalForm<G>) -> Result<Self> {
        if y.canonical_length() == 0 {
            return Err(GarsideError::LengthTooShort { min: 0, got: 0 });
        }
        if !is_in_uss(y)? {
            return Err(GarsideError::NotInUltraSummitSet);
        }
        let g = y.group();
        let p = y.inf();
        let orbit = cycling_orbit(y)?;
        let mut c = Vec::with_capacity(orbit.len());
        let mut r = Vec::with_capacity(orbit.len());
        for z in &orbit {
            let ci = z.initial_factor();
            let ri = NormalForm::from_parts(g, 0, z.factors()[1..].to_vec())
                .expect("a tail of a normal form is normal");
            let mut check = NormalForm::from_simple(g, ci.clone());
            check.mul_delta_power(p);
            if check.multiply(&ri) != *z {
                return Err(GarsideError::ConjugationMismatch("C_i Δ^p R_i decomposition"));
            }
            c.push(ci);
            r.push(ri);
        }
        Ok(CyclingRecord {
            base: y.clone(),
            orbit,
            c,
            r,
            p,
        })
    }

    pub fn base(&self) -> &NormalForm<G> {
        &self.base
    }

    pub fn orbit(&self) -> &[NormalForm<G>] {
        &self.orbit
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    pub fn inf(&self) -> i64 {
        self.p
    }

    fn slot(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.orbit.len() as i64) as usize
    }

    /// `C_i` for any integer `i`.
    pub fn c(&self, i: i64) -> &G::Simple {
        &self.c[self.slot(i)]
    }

    /// `R_i` for any integer `i`.
    pub fn r(&self, i: i64) -> &NormalForm<G> {
        &self.r[self.slot(i)]
    }

    /// `c^{i-1}(Y)` for any integer `i`.
    pub fn cycled(&self, i: i64) -> &NormalForm<G> {
        &self.orbit[self.slot(i)]
    }
}

/// `C_[k,m] = C_{k+1} ⋯ C_{k+m}`.
pub fn product_c<G: GarsideStructure>(rec: &CyclingRecord<G>, k: i64, m: usize) -> NormalForm<G> {
    let mut x = NormalForm::identity(rec.base.group());
    for i in 1..=m as i64 {
        x.push_simple(rec.c(k + i).clone());
    }
    x
}

/// `R_[k,m] = τ^{-p}(R_{k+m}) τ^{-2p}(R_{k+m-1}) ⋯ τ^{-mp}(R_{k+1})`.
pub fn product_r<G: GarsideStructure>(rec: &CyclingRecord<G>, k: i64, m: usize) -> NormalForm<G> {
    let mut x = NormalForm::identity(rec.base.group());
    for j in 1..=m as i64 {
        x = x.multiply(&rec.r(k + m as i64 + 1 - j).tau(-j * rec.p));
    }
    x
}

/// Checks `(X^m Δ^{-mp}) ∧ Δ^m = C_m` for the record's base element.
pub fn verify_cm_theorem<G: GarsideStructure>(rec: &CyclingRecord<G>, m: usize) -> bool {
    let mut xm = rec.base.pow(m as i64);
    xm.mul_delta_power(-(m as i64) * rec.p);
    xm.meet_delta_power(m as i64) == product_c(rec, 0, m)
}

/// `inf(X^m) − m·inf(X)`.
pub fn unexpected_deltas<G: GarsideStructure>(x: &NormalForm<G>, m: usize) -> i64 {
    x.pow(m as i64).inf() - m as i64 * x.inf()
}

fn need_length<G: GarsideStructure>(rec: &CyclingRecord<G>) -> Result<()> {
    let got = rec.base.canonical_length();
    if got > 1 {
        Ok(())
    } else {
        Err(GarsideError::LengthTooShort { min: 1, got })
    }
}

fn stable_depth<G: GarsideStructure>(rec: &CyclingRecord<G>) -> usize {
    rec.base.group().delta_length().saturating_sub(1).max(1)
}

/// Absolute final factor `F = φ(C_[-m,m])` at `m = ||Δ|| - 1`, checked against `m + 1`.
pub fn absolute_final_factor<G: GarsideStructure>(rec: &CyclingRecord<G>) -> Result<G::Simple> {
    need_length(rec)?;
    let m = stable_depth(rec);
    let f = product_c(rec, -(m as i64), m).final_factor();
    let next = product_c(rec, -(m as i64) - 1, m + 1).final_factor();
    if f != next {
        return Err(GarsideError::ChainNotStable);
    }
    Ok(f)
}

/// Absolute initial factor `I = ι(R_[-m,m])` at `m = ||Δ|| - 1`, checked against `m + 1`.
pub fn absolute_initial_factor<G: GarsideStructure>(rec: &CyclingRecord<G>) -> Result<G::Simple> {
    need_length(rec)?;
    let m = stable_depth(rec);
    let i = product_r(rec, -(m as i64), m).initial_factor();
    let next = product_r(rec, -(m as i64) - 1, m + 1).initial_factor();
    if i != next {
        return Err(GarsideError::ChainNotStable);
    }
    Ok(i)
}

/// Least `j ≥ 1` with `φ(C_[k-j+1,j]) = φ(C_[k-j,j+1])`.
pub fn final_chain_stabilization<G: GarsideStructure>(
    rec: &CyclingRecord<G>,
    k: i64,
) -> Result<usize> {
    need_length(rec)?;
    let limit = rec.base.group().delta_length() + 1;
    let mut cur = NormalForm::from_simple(rec.base.group(), rec.c(k + 1).clone());
    for j in 1..=limit {
        let mut next = cur.clone();
        next.prepend_simple(rec.c(k - j as i64 + 1).clone());
        if next.final_factor() == cur.final_factor() {
            return Ok(j);
        }
        cur = next;
    }
    Err(GarsideError::ChainNotStable)
}

/// Least `j ≥ 1` with `ι(R_[k-j+1,j]) = ι(R_[k-j,j+1])`.
pub fn initial_chain_stabilization<G: GarsideStructure>(
    rec: &CyclingRecord<G>,
    k: i64,
) -> Result<usize> {
    need_length(rec)?;
    let limit = rec.base.group().delta_length() + 1;
    let p = rec.p;
    let mut cur = rec.r(k + 1).tau(-p);
    for j in 1..=limit {
        // R_[k-j, j+1] = R_[k-j+1, j] · τ^{-(j+1)p}(R_{k-j+1})
        let next = cur.multiply(&rec.r(k - j as i64 + 1).tau(-(j as i64 + 1) * p));
        if next.initial_factor() == cur.initial_factor() {
            return Ok(j);
        }
        cur = next;
    }
    Err(GarsideError::ChainNotStable)
}

/// `R(X) = k/r` for the largest `k ≤ r` with
/// `(X²Δ^{-2p}) ∧ Δ^k = (XΔ^{-p}) ∧ Δ^k`; zero when `r = 0`.
pub fn rigidity<G: GarsideStructure>(x: &NormalForm<G>) -> Rational {
    let r = x.canonical_length();
    if r == 0 {
        return Rational::from_integer(0);
    }
    let p = x.inf();
    let mut one = x.clone();
    one.mul_delta_power(-p);
    let mut two = x.multiply(x);
    two.mul_delta_power(-2 * p);
    let k = (0..=r as i64)
        .rev()
        .find(|&k| two.meet_delta_power(k) == one.meet_delta_power(k))
        .unwrap_or(0);
    Rational::new(k as u32, r as u32)
}

/// `ι(X) ∧ ι(X⁻¹) = 1`, and false for `ℓ(X) = 0`.
pub fn is_rigid<G: GarsideStructure>(x: &NormalForm<G>) -> bool {
    if x.canonical_length() == 0 {
        return false;
    }
    let g = x.group();
    g.is_identity(&g.meet(&x.initial_factor(), &x.inverse().initial_factor()))
}
