//! GGMS data and pseudo-Weyl polytopes, all in exact arithmetic.
//!
//! A GGMS datum is a total map `W → coweights` whose chamber-adjacent
//! differences are nonnegative multiples of reflected simple coroots:
//!
//! ```text
//! μ_{w s_i} − μ_w ∈ Z≥0 · (w·h_i)      for every w ∈ W, i ∈ I.
//! ```
//!
//! The associated pseudo-Weyl polytope is the intersection of shifted cones
//!
//! ```text
//! P(μ_•) = ⋂_w { v | w⁻¹·(v − μ_w) ∈ Σ_j R≥0 h_j } = Conv{ μ_w },
//! ```
//!
//! and membership/containment is decided purely through that cone
//! description over the rationals — no floating point, no hull library.
//! Degenerate polytopes (points, segments, repeated vertices) are
//! first-class: the datum, not the geometric dimension, is authoritative.

use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::rootdata::{Coweight, Rat, ReducedWord, WeylElt, WeylGroup};
use crate::{Error, Result};

/// A validated GGMS datum: one coweight per Weyl chamber, indexed by the
/// canonical element order of the owning group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GgmsDatum {
    mu: Vec<Coweight>,
}

impl GgmsDatum {
    /// Validates the edge condition and wraps the map.
    pub fn new(group: &WeylGroup, mu: Vec<Coweight>) -> Result<GgmsDatum> {
        assert_eq!(mu.len(), group.size(), "datum must be a total map on W");
        match ggms_violation(group, &mu) {
            None => Ok(GgmsDatum { mu }),
            Some((w, j)) => Err(Error::NotProportional {
                chamber: group.elt_string(w),
                j: j + 1,
            }),
        }
    }

    /// The constant datum `μ_w = λ` (a point polytope).
    pub fn constant(group: &WeylGroup, v: &Coweight) -> GgmsDatum {
        GgmsDatum {
            mu: vec![v.clone(); group.size()],
        }
    }

    pub fn vertex(&self, w: WeylElt) -> &Coweight {
        &self.mu[w.index()]
    }

    /// Vertices in canonical chamber order (possibly with repetition).
    pub fn vertices(&self) -> &[Coweight] {
        &self.mu
    }

    /// Componentwise sum (the GGMS datum of the Minkowski sum).
    pub fn sum(&self, other: &GgmsDatum) -> GgmsDatum {
        GgmsDatum {
            mu: self
                .mu
                .iter()
                .zip(&other.mu)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Componentwise multiple `N·μ_•`.
    pub fn scaled(&self, n: i64) -> GgmsDatum {
        GgmsDatum {
            mu: self.mu.iter().map(|v| v.scaled(n)).collect(),
        }
    }

    /// Serializes as `{word: [coords]}` with ShortLex canonical words as keys,
    /// in canonical element order.
    pub fn to_json(&self, group: &WeylGroup) -> Value {
        let mut map = Map::new();
        for w in group.all() {
            map.insert(group.elt_string(w), json!(self.mu[w.index()].coords));
        }
        Value::Object(map)
    }

    /// Parses the `{word: [coords]}` form; every chamber must be present.
    pub fn from_json(group: &WeylGroup, value: &Value) -> Result<GgmsDatum> {
        let obj = value.as_object().ok_or_else(|| Error::Config {
            field: "datum".into(),
            message: "expected an object {word: [coords]}".into(),
        })?;
        let mut mu = vec![None; group.size()];
        for (key, val) in obj {
            let letters = group.parse_word(key)?;
            let w = group.eval_word(&letters);
            let coords: Vec<i64> = serde_json::from_value(val.clone()).map_err(Error::Json)?;
            if coords.len() != group.rank() {
                return Err(Error::Config {
                    field: "datum".into(),
                    message: format!("vertex `{key}` has wrong rank"),
                });
            }
            mu[w.index()] = Some(Coweight::new(coords));
        }
        let mu: Option<Vec<Coweight>> = mu.into_iter().collect();
        let mu = mu.ok_or_else(|| Error::Config {
            field: "datum".into(),
            message: "datum does not cover every chamber".into(),
        })?;
        GgmsDatum::new(group, mu)
    }
}

/// Checks the edge condition `μ_{w s_i} − μ_w ∈ Z≥0 (w·h_i)` for a total map.
pub fn is_ggms(group: &WeylGroup, mu: &[Coweight]) -> bool {
    ggms_violation(group, mu).is_none()
}

fn ggms_violation(group: &WeylGroup, mu: &[Coweight]) -> Option<(WeylElt, usize)> {
    for w in group.all() {
        for i in 0..group.rank() {
            let ws = group.right_mul_gen(w, i);
            if group.length(ws) > group.length(w) {
                let diff = mu[ws.index()].sub(&mu[w.index()]);
                let dir = group.act(w, &group.cartan().coroot(i));
                if nonneg_multiple(&diff, &dir).is_none() {
                    return Some((w, i));
                }
            }
        }
    }
    None
}

/// Solves `diff = c·dir` for `c ∈ Z≥0`, exactly.
fn nonneg_multiple(diff: &Coweight, dir: &Coweight) -> Option<i64> {
    let k = dir.coords.iter().position(|&c| c != 0)?;
    if diff.coords[k] % dir.coords[k] != 0 {
        return None;
    }
    let c = diff.coords[k] / dir.coords[k];
    if c < 0 || dir.scaled(c) != *diff {
        return None;
    }
    Some(c)
}

/// A pseudo-Weyl polytope, i.e. a GGMS datum regarded as the polytope
/// `P(μ_•)`. Two polytopes are equal iff their data are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PseudoWeylPolytope {
    datum: GgmsDatum,
}

impl PseudoWeylPolytope {
    pub fn new(datum: GgmsDatum) -> PseudoWeylPolytope {
        PseudoWeylPolytope { datum }
    }

    pub fn datum(&self) -> &GgmsDatum {
        &self.datum
    }

    pub fn vertex(&self, w: WeylElt) -> &Coweight {
        self.datum.vertex(w)
    }

    /// Edge lengths `(N^i_1, …, N^i_ℓ)` along a reduced word, from the length
    /// formula `μ_{w_l} − μ_{w_{l−1}} = N^i_l · (w_{l−1}·h_{i_l})`.
    pub fn edge_lengths(&self, group: &WeylGroup, word: &ReducedWord) -> Result<Vec<i64>> {
        edge_lengths(group, &self.datum, word)
    }

    /// Minkowski sum: componentwise sum of the GGMS data.
    pub fn minkowski_sum(&self, other: &PseudoWeylPolytope) -> PseudoWeylPolytope {
        PseudoWeylPolytope {
            datum: self.datum.sum(&other.datum),
        }
    }

    /// The dilate `N·P`, with GGMS datum `N·μ_•`; equals the `N`-fold
    /// Minkowski sum.
    pub fn scale(&self, n: u32) -> PseudoWeylPolytope {
        assert!(n >= 1, "scale factor must be positive");
        PseudoWeylPolytope {
            datum: self.datum.scaled(n as i64),
        }
    }

    /// Exact membership of a rational point via the defining cone description.
    pub fn contains_point_rat(&self, group: &WeylGroup, point: &[Rat]) -> bool {
        self.point_violation(group, point).is_none()
    }

    pub fn contains_point(&self, group: &WeylGroup, point: &Coweight) -> bool {
        self.contains_point_rat(group, &point.to_rat())
    }

    /// First chamber whose cone condition the point violates, if any.
    fn point_violation(&self, group: &WeylGroup, point: &[Rat]) -> Option<WeylElt> {
        for w in group.all() {
            let mu = self.datum.vertex(w);
            let shifted: Vec<Rat> = point
                .iter()
                .zip(&mu.coords)
                .map(|(p, &m)| p - Ratio::from_integer(m))
                .collect();
            let local = group.act_rat(group.inv(w), &shifted);
            let coords = group.cartan().coroot_coords_rat(&local);
            if coords.iter().any(|c| *c < Ratio::from_integer(0)) {
                return Some(w);
            }
        }
        None
    }

    /// Exact set containment `inner ⊆ self`: every vertex of the inner datum
    /// must satisfy every cone condition of the outer one.
    pub fn contains(&self, group: &WeylGroup, inner: &PseudoWeylPolytope) -> bool {
        self.containment_violation(group, inner).is_none()
    }

    /// On failure, the witness pair: the inner vertex chamber `w'` and the
    /// outer cone chamber `w` whose condition `μ^{in}_{w'}` violates.
    pub fn containment_violation(
        &self,
        group: &WeylGroup,
        inner: &PseudoWeylPolytope,
    ) -> Option<(WeylElt, WeylElt)> {
        for wp in group.all() {
            let v = inner.datum.vertex(wp).to_rat();
            if let Some(w) = self.point_violation(group, &v) {
                return Some((wp, w));
            }
        }
        None
    }
}

/// Edge lengths of a datum along a reduced word (any target).
pub fn edge_lengths(group: &WeylGroup, datum: &GgmsDatum, word: &ReducedWord) -> Result<Vec<i64>> {
    let chain = group.prefixes(word);
    let mut out = Vec::with_capacity(word.len());
    for (l, &j) in word.letters().iter().enumerate() {
        let prev = chain[l];
        let next = chain[l + 1];
        let diff = datum.vertex(next).sub(datum.vertex(prev));
        let dir = group.act(prev, &group.cartan().coroot(j as usize));
        match nonneg_multiple(&diff, &dir) {
            Some(c) => out.push(c),
            None => {
                return Err(Error::NotProportional {
                    chamber: group.elt_string(prev),
                    j: j as usize + 1,
                })
            }
        }
    }
    Ok(out)
}

/// The dominant `W`-translate of a rational point.
pub fn dominant_translate(group: &WeylGroup, point: &[Rat]) -> Vec<Rat> {
    let zero = Ratio::from_integer(0);
    let mut v = point.to_vec();
    let mut steps = 0usize;
    loop {
        match v.iter().position(|c| *c < zero) {
            None => return v,
            Some(j) => {
                // s_j·v = v − ⟨v,α_j⟩ h_j
                let c = v[j];
                for (k, entry) in v.iter_mut().enumerate() {
                    *entry -= c * Ratio::from_integer(group.cartan().entry(j, k));
                }
            }
        }
        steps += 1;
        assert!(
            steps <= group.size() * group.rank() + 1,
            "dominance algorithm must terminate"
        );
    }
}

/// Exact membership `v ∈ Conv(W·λ)`: holds iff `λ − dom(v)` has
/// all-nonnegative rational coroot-basis coordinates.
pub fn in_worbit_hull_rat(group: &WeylGroup, point: &[Rat], lambda: &Coweight) -> Result<bool> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords.clone()));
    }
    let dom = dominant_translate(group, point);
    let diff: Vec<Rat> = lambda
        .coords
        .iter()
        .map(|&c| Ratio::from_integer(c))
        .zip(&dom)
        .map(|(l, d)| l - d)
        .collect();
    let coords = group.cartan().coroot_coords_rat(&diff);
    Ok(coords.iter().all(|c| *c >= Ratio::from_integer(0)))
}

/// Integral-point version of [`in_worbit_hull_rat`].
pub fn in_worbit_hull(group: &WeylGroup, v: &Coweight, lambda: &Coweight) -> Result<bool> {
    in_worbit_hull_rat(group, &v.to_rat(), lambda)
}
