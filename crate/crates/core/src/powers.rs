//! Powers in their ultra summit sets and the search for a rigid power.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::conjugacy::{is_in_uss, uss_path};
use crate::error::{GarsideError, Result};
use crate::normal_form::NormalForm;
use crate::rigidity::{is_rigid, rigidity, CyclingRecord};
use crate::structure::GarsideStructure;

const STABILIZE_PASSES: usize = 64;

fn window_order(a: i64, b: i64) -> Vec<i64> {
    let mut ks: Vec<i64> = (a..=b).filter(|&k| k != 0).collect();
    ks.sort_by_key(|&k| (k.abs(), k < 0));
    ks
}

/// Conjugates `x` to some `V` with `V^m` in its ultra summit set for every
/// nonzero `m` in `[a, b]`. Returns `V` and the conjugator.
///
/// A power `V^k` outside its USS is pushed in by cycling and decycling; `V`
/// is conjugated by the same elements, which keeps every power that was
/// already in its USS there.
pub fn stabilize_powers<G: GarsideStructure>(
    x: &NormalForm<G>,
    a: i64,
    b: i64,
) -> Result<(NormalForm<G>, NormalForm<G>)> {
    let g = x.group();
    let mut v = x.clone();
    let mut conj = NormalForm::identity(g);
    if x.is_delta_power() || a > b {
        return Ok((v, conj));
    }
    let ks = window_order(a, b);
    for _ in 0..STABILIZE_PASSES {
        let mut changed = false;
        for &k in &ks {
            let vk = v.pow(k);
            if is_in_uss(&vk)? {
                continue;
            }
            let c = uss_path(&vk)?.conjugator();
            v = v.conjugate(&c);
            conj = conj.multiply(&c);
            changed = true;
        }
        if !changed {
            return Ok((v, conj));
        }
    }
    Err(GarsideError::IterationGuard("stabilize_powers"))
}

/// One tested power in a rigid-power search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerEntry {
    pub m: usize,
    pub inf: i64,
    pub sup: i64,
    pub rigidity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct RigidPowerResult<G: GarsideStructure> {
    pub m: usize,
    pub witness: NormalForm<G>,
}

/// `C_M = Δ^k X^t` with `Δ^k` central.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(rename = "M")]
    pub big_m: usize,
    pub k: i64,
    pub t: usize,
}

/// Which hypotheses behind the search bounds hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    /// Every power in the window is in its ultra summit set.
    pub window_stabilized: bool,
    pub canonical_length: usize,
    /// For length-one elements, the first `r ≤ ||Δ||` with `ℓ(V^r) ≠ 1`.
    pub length_lift: Option<usize>,
    /// Some power of the element is a power of Δ.
    pub periodic: bool,
    /// Largest exponent tested plus one.
    pub bound: u64,
    /// Whether an empty result rules out rigid powers altogether.
    pub conclusive: bool,
}

/// Full account of a [`rigid_power`] search.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct RigidPowerReport<G: GarsideStructure> {
    pub input: NormalForm<G>,
    pub window: [i64; 2],
    pub stabilized: NormalForm<G>,
    pub stabilization_conjugator: NormalForm<G>,
    pub chain: Vec<PowerEntry>,
    pub result: Option<RigidPowerResult<G>>,
    pub certificate: Option<Certificate>,
    pub hypotheses: Hypotheses,
}

impl<G: GarsideStructure> RigidPowerReport<G> {
    /// `(m, witness, conjugator)` with `witness = (input^m)^conjugator` rigid.
    pub fn found(&self) -> Option<(usize, &NormalForm<G>, &NormalForm<G>)> {
        self.result
            .as_ref()
            .map(|r| (r.m, &r.witness, &self.stabilization_conjugator))
    }
}

/// Least rigid power of a stabilized conjugate of `x`, searched up to
/// `||Δ||²` (canonical length above one) or `||Δ||³` (length one).
pub fn rigid_power<G: GarsideStructure>(x: &NormalForm<G>) -> Result<RigidPowerReport<G>> {
    if x.is_delta_power() {
        return Err(GarsideError::DeltaPower);
    }
    let g = x.group();
    let d = g.delta_length() as i64;
    let window = [-d * d, d * d];
    let (v, conj) = stabilize_powers(x, window[0], window[1])?;
    let len = v.canonical_length();
    let mut hyp = Hypotheses {
        window_stabilized: true,
        canonical_length: len,
        length_lift: None,
        periodic: false,
        bound: (d * d) as u64,
        conclusive: true,
    };
    let mut limit = (d * d) as usize;
    if len == 1 {
        hyp.bound = (d * d * d) as u64;
        let mut p = v.clone();
        let mut lift = None;
        for r in 1..=d as usize {
            if p.canonical_length() != 1 {
                lift = Some((r, p.canonical_length()));
                break;
            }
            p = p.multiply(&v);
        }
        match lift {
            Some((_, 0)) => hyp.periodic = true,
            Some((r, _)) => {
                hyp.length_lift = Some(r);
                limit = r * (d * d) as usize;
            }
            // cannot happen once powers are stabilized
            None => hyp.conclusive = false,
        }
    }
    let mut report = RigidPowerReport {
        input: x.clone(),
        window,
        stabilized: v.clone(),
        stabilization_conjugator: conj,
        chain: Vec::new(),
        result: None,
        certificate: None,
        hypotheses: hyp,
    };
    if report.hypotheses.periodic {
        return Ok(report);
    }
    let mut p = NormalForm::identity(g);
    for m in 1..limit {
        p = p.multiply(&v);
        let rig = rigidity(&p);
        report.chain.push(PowerEntry {
            m,
            inf: p.inf(),
            sup: p.sup(),
            rigidity: rig.to_string(),
        });
        if is_rigid(&p) {
            report.result = Some(RigidPowerResult { m, witness: p });
            report.certificate = find_certificate(&v, m)?;
            break;
        }
    }
    Ok(report)
}

fn factor_key<G: GarsideStructure>(x: &NormalForm<G>) -> u64 {
    let mut h = DefaultHasher::new();
    x.factors().hash(&mut h);
    h.finish()
}

/// Looks for `C_M = Δ^k V^t` with `M` a multiple of the orbit length.
fn find_certificate<G: GarsideStructure>(v: &NormalForm<G>, m: usize) -> Result<Option<Certificate>> {
    let rec = CyclingRecord::new(v)?;
    let g = v.group();
    let n = rec.orbit_len();
    let e = g.tau_order();
    let cap = e * m * n * g.delta_length();
    // V^t indexed by its factor sequence
    let mut seen: HashMap<u64, Vec<(usize, i64)>> = HashMap::new();
    let mut vt = NormalForm::identity(g);
    for t in 1..cap {
        vt = vt.multiply(v);
        seen.entry(factor_key(&vt)).or_default().push((t, vt.inf()));
    }
    let mut cm = NormalForm::identity(g);
    for big_m in 1..=cap {
        cm.push_simple(rec.c(big_m as i64).clone());
        if big_m % n != 0 {
            continue;
        }
        let Some(hits) = seen.get(&factor_key(&cm)) else {
            continue;
        };
        for &(t, inf) in hits {
            let k = cm.inf() - inf;
            if t == 0 || k.rem_euclid(e as i64) != 0 {
                continue;
            }
            let mut check = v.pow(t as i64);
            check.premul_delta_power(k);
            if check == cm {
                return Ok(Some(Certificate { big_m, k, t }));
            }
        }
    }
    Ok(None)
}

/// `ι(X), ι(X²), …, ι(X^limit)` and where the sequence first repeats.
#[derive(Clone, Debug)]
pub struct IotaChain<G: GarsideStructure> {
    pub factors: Vec<G::Simple>,
    /// First `(a, b)`, `a < b`, with `ι(X^a) = ι(X^b)`, minimizing `b`.
    pub repetition: Option<(usize, usize)>,
    /// Whether `ι(X^{a+k}) = ι(X^{b+k})` for every `k` inside the computed range.
    pub periodic: bool,
}

impl<G: GarsideStructure> IotaChain<G> {
    /// Every two entries are comparable under `≼`.
    pub fn totally_ordered(&self, g: &G) -> bool {
        self.factors.iter().all(|a| {
            self.factors
                .iter()
                .all(|b| g.is_prefix(a, b) || g.is_prefix(b, a))
        })
    }
}

pub fn iota_power_chain<G: GarsideStructure>(x: &NormalForm<G>, limit: usize) -> IotaChain<G> {
    let mut factors = Vec::with_capacity(limit);
    let mut p = NormalForm::identity(x.group());
    for _ in 0..limit {
        p = p.multiply(x);
        factors.push(p.initial_factor());
    }
    let repetition = (1..factors.len()).find_map(|b| {
        (0..b)
            .find(|&a| factors[a] == factors[b])
            .map(|a| (a + 1, b + 1))
    });
    let periodic = match repetition {
        Some((a, b)) => (0..=limit - b).all(|k| factors[a - 1 + k] == factors[b - 1 + k]),
        None => true,
    };
    IotaChain {
        factors,
        repetition,
        periodic,
    }
}
