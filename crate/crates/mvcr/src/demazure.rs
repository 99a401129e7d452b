//! Demazure crystals `MV_x(λ)` and opposite-Demazure membership.
//!
//! Two equivalent constructions are implemented and cross-validated:
//! the string enumeration `{ f_{j_1}^{c_1} ⋯ f_{j_r}^{c_r} P_λ }` over a
//! reduced word of `x`, and the inductive relation
//! `B_x(λ) = ⋃_k f_j^k B_{s_j x}(λ) \ {0}` for a left descent `j` of `x`.
//! A third, independent route — the Demazure operator `D_j` acting on the
//! group algebra of the coweight lattice — provides the character oracle.
//!
//! Opposite-Demazure membership is the polytopal criterion: `P ∈ MV^x(λ)`
//! iff `P ⊇ P_{x·λ}` as sets.

use std::collections::{BTreeMap, BTreeSet};

use crate::extremal::extremal_polytope;
use crate::mvcrystal::{MvCrystal, MvPolytope};
use crate::rootdata::{Coweight, WeylElt, WeylGroup};
use crate::Result;

/// The members of `MV_x(λ)`, as sorted node indices into a generated
/// crystal. `x` is stored as its minimal coset representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DemazureSet {
    pub x: WeylElt,
    pub members: Vec<usize>,
}

impl DemazureSet {
    pub fn contains(&self, node: usize) -> bool {
        self.members.binary_search(&node).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Closes a node set under all powers of `f_j` (`k = 0` included).
fn close_under_f(crystal: &MvCrystal, j: usize, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &b in seed {
        let mut node = b;
        out.insert(node);
        while let Some(next) = crystal.f_idx(node, j) {
            node = next;
            out.insert(node);
        }
    }
    out
}

/// `MV_x(λ)` via the string enumeration along the ShortLex-least reduced
/// word of the minimal coset representative of `x`.
pub fn demazure_set(group: &WeylGroup, crystal: &MvCrystal, x: WeylElt) -> Result<DemazureSet> {
    let rep = group.min_coset_rep_of(x, crystal.lambda())?;
    let word = group.word(rep).to_vec();
    Ok(DemazureSet {
        x: rep,
        members: string_closure(crystal, &word),
    })
}

/// The raw string enumeration over an explicit word `(j_1, …, j_r)`:
/// applies the rightmost operator first, closing under each `f_{j_t}^{c_t}`.
pub fn string_closure(crystal: &MvCrystal, word: &[u8]) -> Vec<usize> {
    let mut set = BTreeSet::from([crystal.highest()]);
    for &j in word.iter().rev() {
        set = close_under_f(crystal, j as usize, &set);
    }
    set.into_iter().collect()
}

/// `MV_x(λ)` via the inductive relation on left descents; must agree with
/// [`demazure_set`] exactly.
pub fn demazure_set_recursive(
    group: &WeylGroup,
    crystal: &MvCrystal,
    x: WeylElt,
) -> Result<DemazureSet> {
    let rep = group.min_coset_rep_of(x, crystal.lambda())?;
    let mut memo: BTreeMap<WeylElt, BTreeSet<usize>> = BTreeMap::new();
    let members = recursive_set(group, crystal, rep, &mut memo).clone();
    Ok(DemazureSet {
        x: rep,
        members: members.into_iter().collect(),
    })
}

fn recursive_set<'a>(
    group: &WeylGroup,
    crystal: &MvCrystal,
    x: WeylElt,
    memo: &'a mut BTreeMap<WeylElt, BTreeSet<usize>>,
) -> &'a BTreeSet<usize> {
    if !memo.contains_key(&x) {
        let set = if x == group.identity() {
            BTreeSet::from([crystal.highest()])
        } else {
            let j = (0..group.rank())
                .find(|&j| group.is_left_descent(j, x))
                .expect("non-identity elements have a left descent");
            let smaller = recursive_set(group, crystal, group.left_mul_gen(j, x), memo).clone();
            close_under_f(crystal, j, &smaller)
        };
        memo.insert(x, set);
    }
    &memo[&x]
}

/// `P ∈ MV_x(λ)`?
pub fn in_demazure(
    group: &WeylGroup,
    crystal: &MvCrystal,
    node: usize,
    x: WeylElt,
) -> Result<bool> {
    Ok(demazure_set(group, crystal, x)?.contains(node))
}

/// Opposite-Demazure membership: `P ∈ MV^x(λ)` iff `P ⊇ P_{x·λ}`.
pub fn opposite_demazure_member(group: &WeylGroup, p: &MvPolytope, x: WeylElt) -> Result<bool> {
    let extremal = extremal_polytope(group, x, p.lambda())?;
    Ok(p.polytope().contains(group, extremal.polytope()))
}

/// Demazure character through the divided-difference operators
/// `D_j e^μ = (e^μ − e^{s_j·μ − h_j}) / (1 − e^{−h_j})`, applied along a
/// reduced word of `x` to `e^λ`; exact polynomial arithmetic in the group
/// algebra of the coweight lattice. Returns the weight multiset.
pub fn demazure_character(
    group: &WeylGroup,
    x: WeylElt,
    lambda: &Coweight,
) -> Result<BTreeMap<Coweight, usize>> {
    let rep = group.min_coset_rep_of(x, lambda)?;
    let mut poly: BTreeMap<Coweight, i64> = BTreeMap::from([(lambda.clone(), 1)]);
    for &j in group.word(rep).iter().rev() {
        poly = demazure_op(group, j as usize, &poly);
    }
    let mut out = BTreeMap::new();
    for (mu, c) in poly {
        assert!(
            c >= 0,
            "Demazure characters of dominant weights are effective"
        );
        if c > 0 {
            out.insert(mu, c as usize);
        }
    }
    Ok(out)
}

fn demazure_op(
    group: &WeylGroup,
    j: usize,
    poly: &BTreeMap<Coweight, i64>,
) -> BTreeMap<Coweight, i64> {
    let h = group.cartan().coroot(j);
    let mut out: BTreeMap<Coweight, i64> = BTreeMap::new();
    let mut add = |mu: Coweight, c: i64| {
        *out.entry(mu).or_insert(0) += c;
    };
    for (mu, &c) in poly {
        let k = mu.pairing(j);
        if k >= 0 {
            for t in 0..=k {
                add(mu.sub(&h.scaled(t)), c);
            }
        } else if k <= -2 {
            for t in 1..=(-k - 1) {
                add(mu.add(&h.scaled(t)), -c);
            }
        }
        // k == -1 contributes nothing
    }
    out.retain(|_, c| *c != 0);
    out
}
