//! Extremal MV polytopes `P_{x·λ} = Conv(W_{≤x}·λ)`.
//!
//! The GGMS datum of an extremal polytope is assembled chamber chain by
//! chamber chain: along a reduced word `i` of `w0` the vertices are
//! `μ_{w^i_l} = y^i_l·λ`, where the `y`-sequence runs the downward recursion
//!
//! ```text
//! y^i_m = e,    y^i_{l−1} = y^i_l                 if l ∈ min S(xw0, i),
//!               y^i_{l−1} = s_{β^i_l} · y^i_l     otherwise,
//! ```
//!
//! with `β^i_l = w^i_{l−1}·α_{i_l}` and `min S(xw0, i)` the lexicographically
//! least position tuple carrying a reduced word of `xw0` inside `i`.

use std::collections::HashMap;

use crate::mvcrystal::{is_mv_datum, MvCrystal, MvPolytope};
use crate::polytope::GgmsDatum;
use crate::rootdata::{Coweight, ReducedWord, WeylElt, WeylGroup};
use crate::{Error, Result};

/// The lexicographically least increasing tuple `(a_1 < … < a_p)` of
/// positions (1-based) such that `s_{i_{a_1}} ⋯ s_{i_{a_p}} = xw0` is a
/// reduced product. Found by greedy left-to-right selection with a
/// suffix-feasibility table; nonempty by the subword property.
pub fn min_lex_subword(group: &WeylGroup, x: WeylElt, word: &ReducedWord) -> Vec<usize> {
    let target = group.mul(x, group.longest());
    let m = word.len();
    // feasible[l] = elements with a reduced word inside the suffix i_{l}..i_m
    // (1-based l, so feasible[m+1] = {e}).
    let mut feasible = vec![vec![false; group.size()]; m + 2];
    feasible[m + 1][0] = true;
    let mut members: Vec<Vec<WeylElt>> = vec![Vec::new(); m + 2];
    members[m + 1].push(group.identity());
    for l in (1..=m).rev() {
        let j = word.letters()[l - 1] as usize;
        feasible[l] = feasible[l + 1].clone();
        members[l] = members[l + 1].clone();
        let mut added = Vec::new();
        for &t in &members[l + 1] {
            let st = group.left_mul_gen(j, t);
            if group.length(st) > group.length(t) && !feasible[l][st.index()] {
                feasible[l][st.index()] = true;
                added.push(st);
            }
        }
        members[l].extend(added);
    }
    let mut positions = Vec::new();
    let mut rest = target;
    for l in 1..=m {
        if rest == group.identity() {
            break;
        }
        let j = word.letters()[l - 1] as usize;
        let next = group.left_mul_gen(j, rest);
        if group.length(next) < group.length(rest) && feasible[l + 1][next.index()] {
            positions.push(l);
            rest = next;
        }
    }
    assert_eq!(
        rest,
        group.identity(),
        "S(xw0, i) is nonempty by the subword property"
    );
    positions
}

/// The `y`- and `v`-sequences of an extremal datum along one reduced word.
#[derive(Clone, Debug)]
pub struct YSequence {
    pub word: ReducedWord,
    /// 1-based positions of `min S(xw0, i)`.
    pub positions: Vec<usize>,
    pub y: Vec<WeylElt>,
    pub v: Vec<WeylElt>,
}

/// Runs the downward recursion for `y^i_l` (and the companion `v^i_l`),
/// checking the identity `y^i_l = w^i_l v^i_l w0^{-1}` at every step.
pub fn y_sequence(group: &WeylGroup, x: WeylElt, word: &ReducedWord) -> YSequence {
    let positions = min_lex_subword(group, x, word);
    let m = word.len();
    let chain = group.prefixes(word);
    let mut y = vec![group.identity(); m + 1];
    let mut v = vec![group.identity(); m + 1];
    for l in (1..=m).rev() {
        let in_positions = positions.binary_search(&l).is_ok();
        if in_positions {
            y[l - 1] = y[l];
            v[l - 1] = group.left_mul_gen(word.letters()[l - 1] as usize, v[l]);
            assert_eq!(group.length(v[l - 1]), group.length(v[l]) + 1);
        } else {
            let beta = group.root_image(
                chain[l - 1],
                group.simple_root(word.letters()[l - 1] as usize),
            );
            y[l - 1] = group.mul(group.reflection(beta), y[l]);
            v[l - 1] = v[l];
        }
    }
    let w0_inv = group.inv(group.longest());
    for l in 0..=m {
        assert_eq!(
            y[l],
            group.mul(group.mul(chain[l], v[l]), w0_inv),
            "y^i_l = w^i_l v^i_l w0^{{-1}}"
        );
    }
    YSequence {
        word: word.clone(),
        positions,
        y,
        v,
    }
}

/// The extremal GGMS datum for an arbitrary `x ∈ W` (no coset reduction):
/// assembles `μ_{w^i_l} = y^i_l · λ` from every reduced word of `w0` and
/// checks that the words agree chamber by chamber.
pub fn extremal_datum(group: &WeylGroup, x: WeylElt, lambda: &Coweight) -> Result<GgmsDatum> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords.clone()));
    }
    let mut mu: Vec<Option<Coweight>> = vec![None; group.size()];
    for word in group.move_graph().words() {
        let seq = y_sequence(group, x, word);
        let chain = group.prefixes(word);
        for (l, &w) in chain.iter().enumerate() {
            let vertex = group.act(seq.y[l], lambda);
            match &mu[w.index()] {
                None => mu[w.index()] = Some(vertex),
                Some(existing) => {
                    if *existing != vertex {
                        return Err(Error::InconsistentVertex {
                            chamber: group.elt_string(w),
                        });
                    }
                }
            }
        }
    }
    let mu: Vec<Coweight> = mu.into_iter().map(|v| v.expect("chains cover W")).collect();
    GgmsDatum::new(group, mu)
}

/// The extremal MV polytope `P_{x·λ}`. `x` is first reduced to its minimal
/// coset representative modulo `Stab_W(λ)` (the polytope depends only on
/// `x·λ`).
pub fn extremal_polytope(group: &WeylGroup, x: WeylElt, lambda: &Coweight) -> Result<MvPolytope> {
    let rep = group.min_coset_rep_of(x, lambda)?;
    let datum = extremal_datum(group, rep, lambda)?;
    debug_assert!(is_mv_datum(group, &datum));
    debug_assert!(hull_equals_bruhat_orbit(group, &datum, rep, lambda));
    MvPolytope::from_parts(group, datum, lambda)
}

/// Checks `P(μ_•) = Conv(W_{≤x}·λ)`: every vertex is an orbit point `z·λ`
/// with `z ≤ x`, and every such orbit point satisfies all cone conditions.
fn hull_equals_bruhat_orbit(
    group: &WeylGroup,
    datum: &GgmsDatum,
    x: WeylElt,
    lambda: &Coweight,
) -> bool {
    let below: Vec<Coweight> = group
        .all()
        .filter(|&z| group.bruhat_leq(z, x))
        .map(|z| group.act(z, lambda))
        .collect();
    let poly = crate::polytope::PseudoWeylPolytope::new(datum.clone());
    datum.vertices().iter().all(|v| below.contains(v))
        && below.iter().all(|p| poly.contains_point(group, p))
}

/// The extremal family of `MV(λ)`: one polytope per minimal coset
/// representative, with a reverse index for extremality tests.
pub struct ExtremalFamily {
    reps: Vec<WeylElt>,
    polys: Vec<MvPolytope>,
    by_datum: HashMap<GgmsDatum, WeylElt>,
}

impl ExtremalFamily {
    pub fn new(group: &WeylGroup, lambda: &Coweight) -> Result<ExtremalFamily> {
        let reps = group.min_coset_reps(lambda)?;
        let mut polys = Vec::with_capacity(reps.len());
        let mut by_datum = HashMap::new();
        for &x in &reps {
            let p = extremal_polytope(group, x, lambda)?;
            by_datum.insert(p.datum().clone(), x);
            polys.push(p);
        }
        Ok(ExtremalFamily {
            reps,
            polys,
            by_datum,
        })
    }

    pub fn reps(&self) -> &[WeylElt] {
        &self.reps
    }

    pub fn polytopes(&self) -> &[MvPolytope] {
        &self.polys
    }

    /// `P_{x·λ}` for any `x` (reduced to its coset representative).
    pub fn polytope_for(&self, group: &WeylGroup, x: WeylElt, lambda: &Coweight) -> &MvPolytope {
        let rep = group
            .min_coset_rep_of(x, lambda)
            .expect("family was built for a dominant lambda");
        let i = self.reps.iter().position(|&r| r == rep).unwrap();
        &self.polys[i]
    }

    /// The unique `x ∈ W^λ_min` with `P = P_{x·λ}`, or `None` if `P` is not
    /// extremal.
    pub fn is_extremal(&self, p: &MvPolytope) -> Option<WeylElt> {
        self.by_datum.get(p.datum()).copied()
    }
}

/// Locates `P_{x·λ}` inside a generated crystal through the string of
/// lowering operators `f_{j_t}^{c_t}` along a reduced word of `x` (with
/// `c_t = ⟨s_{j_t}⋯s_{j_r}·λ, α_{j_t}⟩` read off the partial products).
pub fn extremal_node(group: &WeylGroup, crystal: &MvCrystal, x: WeylElt) -> usize {
    let word = group.word(x).to_vec();
    let mut node = crystal.highest();
    let mut partial = group.identity(); // s_{j_{t+1}} ⋯ s_{j_r}
    for &jt in word.iter().rev() {
        let j = jt as usize;
        let c = group.act(partial, crystal.lambda()).pairing(j);
        assert!(c >= 0);
        for _ in 0..c {
            node = crystal
                .f_idx(node, j)
                .expect("extremal strings stay inside the crystal");
        }
        partial = group.left_mul_gen(j, partial);
    }
    node
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvcrystal::MvCrystal;

    fn a2() -> WeylGroup {
        WeylGroup::parse("A2").unwrap()
    }

    /// Brute-force oracle: all increasing p-tuples whose product is xw0,
    /// reduced, lexicographically least.
    fn min_lex_oracle(g: &WeylGroup, x: WeylElt, word: &ReducedWord) -> Vec<usize> {
        let target = g.mul(x, g.longest());
        let p = g.length(target);
        let m = word.len();
        let mut best: Option<Vec<usize>> = None;
        let mut tuple = Vec::new();
        fn rec(
            g: &WeylGroup,
            word: &ReducedWord,
            target: WeylElt,
            p: usize,
            start: usize,
            m: usize,
            tuple: &mut Vec<usize>,
            best: &mut Option<Vec<usize>>,
        ) {
            if tuple.len() == p {
                let prod = g.eval_word(
                    &tuple
                        .iter()
                        .map(|&l| word.letters()[l - 1])
                        .collect::<Vec<_>>(),
                );
                if prod == target {
                    match best {
                        None => *best = Some(tuple.clone()),
                        Some(b) => {
                            if tuple < b {
                                *best = Some(tuple.clone());
                            }
                        }
                    }
                }
                return;
            }
            for l in start..=m {
                tuple.push(l);
                rec(g, word, target, p, l + 1, m, tuple, best);
                tuple.pop();
            }
        }
        rec(g, word, target, p, 1, m, &mut tuple, &mut best);
        best.expect("S(xw0, i) nonempty")
    }

    #[test]
    fn min_lex_examples() {
        let g = a2();
        let word = g.try_reduced_word(&[0, 1, 0]).unwrap();
        assert_eq!(min_lex_subword(&g, g.longest(), &word), Vec::<usize>::new());
        assert_eq!(min_lex_subword(&g, g.identity(), &word), vec![1, 2, 3]);
        assert_eq!(min_lex_subword(&g, g.gen(0), &word), vec![2, 3]);
    }

    #[test]
    fn min_lex_matches_oracle() {
        for spec in ["A2", "A3", "A1xA1"] {
            let g = WeylGroup::parse(spec).unwrap();
            for word in g.move_graph().words() {
                for x in g.all() {
                    assert_eq!(
                        min_lex_subword(&g, x, word),
                        min_lex_oracle(&g, x, word),
                        "{spec} x={} i={:?}",
                        g.elt_string(x),
                        word.letters()
                    );
                }
            }
        }
    }

    #[test]
    fn y_sequence_identity_case() {
        let g = a2();
        let word = g.try_reduced_word(&[0, 1, 0]).unwrap();
        // x = e: every position appears, all y are e
        let seq = y_sequence(&g, g.identity(), &word);
        assert!(seq.y.iter().all(|&y| y == g.identity()));
        // x = s1: positions (2,3), y0 = s1
        let seq = y_sequence(&g, g.gen(0), &word);
        assert_eq!(seq.positions, vec![2, 3]);
        assert_eq!(seq.y[0], g.gen(0));
    }

    #[test]
    fn extremal_endpoints() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let top = extremal_polytope(&g, g.identity(), &lambda).unwrap();
        assert_eq!(&top, &MvPolytope::highest(&g, &lambda).unwrap());
        let bottom = extremal_polytope(&g, g.longest(), &lambda).unwrap();
        for w in g.all() {
            assert_eq!(bottom.vertex(w), &g.act(g.mul(w, g.longest()), &lambda));
        }
        let seg = extremal_polytope(&g, g.gen(0), &lambda).unwrap();
        assert_eq!(seg.wt(&g), &g.act(g.gen(0), &lambda));
        let verts: std::collections::HashSet<_> = seg.datum().vertices().iter().collect();
        assert_eq!(verts.len(), 2);
        assert!(verts.contains(&lambda));
        assert!(verts.contains(&g.act(g.gen(0), &lambda)));
    }

    #[test]
    fn nonminimal_x_reduces() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 0]); // stabilized by s2
        let via_s2 = extremal_polytope(&g, g.gen(1), &lambda).unwrap();
        assert_eq!(via_s2, MvPolytope::highest(&g, &lambda).unwrap());
        // raw datum with the non-minimal element agrees as well
        let raw = extremal_datum(&g, g.gen(1), &lambda).unwrap();
        assert_eq!(&raw, via_s2.datum());
    }

    #[test]
    fn extremality_test() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let family = ExtremalFamily::new(&g, &lambda).unwrap();
        assert_eq!(family.reps().len(), 6);
        let crystal = MvCrystal::generate(&g, &lambda).unwrap();
        let mut extremal_count = 0;
        for p in crystal.nodes() {
            if let Some(x) = family.is_extremal(p) {
                extremal_count += 1;
                assert_eq!(&extremal_polytope(&g, x, &lambda).unwrap(), p);
            }
        }
        // 6 extremal nodes; the two weight-0 nodes are not extremal
        assert_eq!(extremal_count, 6);
        for p in crystal.nodes() {
            if p.wt(&g).is_zero() {
                assert!(family.is_extremal(p).is_none());
            }
        }
        // the highest node is P_λ and the lowest is Conv(W·λ) = P_{w0·λ}
        assert_eq!(
            family.is_extremal(crystal.node(crystal.highest())),
            Some(g.identity())
        );
        assert_eq!(
            family.is_extremal(crystal.node(crystal.lowest(&g))),
            Some(g.longest())
        );
    }

    #[test]
    fn bruhat_monotone_containment() {
        let g = a2();
        for lambda in [Coweight::new(vec![1, 1]), Coweight::new(vec![1, 0])] {
            let polys: Vec<MvPolytope> = g
                .all()
                .map(|x| extremal_polytope(&g, x, &lambda).unwrap())
                .collect();
            for x in g.all() {
                for y in g.all() {
                    if g.bruhat_leq(x, y) {
                        assert!(polys[y.index()]
                            .polytope()
                            .contains(&g, polys[x.index()].polytope()));
                    }
                }
            }
        }
    }

    #[test]
    fn edge_inequalities() {
        // μ_{ws_j} ∈ {μ_w, (ws_j w^{-1})·μ_w} and ⟨μ_{ws_j}, w·α_j⟩ ≥ 0
        // at every ascending edge of every extremal datum.
        let g = a2();
        for lambda in [Coweight::new(vec![1, 1]), Coweight::new(vec![2, 1])] {
            for x in g.all() {
                let p = extremal_polytope(&g, x, &lambda).unwrap();
                for w in g.all() {
                    for j in 0..g.rank() {
                        let ws = g.right_mul_gen(w, j);
                        if g.length(ws) <= g.length(w) {
                            continue;
                        }
                        let refl = g.mul(g.mul(ws, g.inv(w)), g.identity());
                        let mv = p.vertex(w);
                        let mvs = p.vertex(ws);
                        assert!(mvs == mv || *mvs == g.act(refl, mv));
                        let root = g.root_image(w, g.simple_root(j));
                        let pair: i64 = g
                            .root_coords(root)
                            .iter()
                            .zip(&mvs.coords)
                            .map(|(c, v)| c * v)
                            .sum();
                        assert!(pair >= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn f_string_reaches_extremal_nodes() {
        let g = a2();
        for lambda in [Coweight::new(vec![1, 1]), Coweight::new(vec![1, 0])] {
            let crystal = MvCrystal::generate(&g, &lambda).unwrap();
            for x in g.min_coset_reps(&lambda).unwrap() {
                let node = extremal_node(&g, &crystal, x);
                let direct = extremal_polytope(&g, x, &lambda).unwrap();
                assert_eq!(crystal.node(node), &direct);
            }
        }
    }
}
