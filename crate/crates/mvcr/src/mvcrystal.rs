//! MV data and the Lusztig–Berenstein–Zelevinsky crystal structure on
//! `MV(λ)`.
//!
//! An MV datum is a GGMS datum whose edge lengths transform under every
//! 2-move by a swap and under every 3-move by the tropical rule
//!
//! ```text
//! (n'_{k+1}, n'_{k+2}, n'_{k+3})
//!   = (n_{k+2}+n_{k+3}−t, t, n_{k+1}+n_{k+2}−t),   t = min(n_{k+1}, n_{k+3}).
//! ```
//!
//! A single edge-length vector on one reduced word of `w0` therefore
//! determines the whole polytope: transport it across the move graph and
//! integrate the length formula along every chamber chain. The Kashiwara
//! operators act on the first Lusztig coordinate of a word whose first
//! letter is `j` (all other chain vertices have `s_j w < w` and are frozen,
//! while `μ_e` moves by `∓h_j`); `f_j` sends the polytope to `0` exactly
//! when it would leave `Conv(W·λ)`, which is decided in `O(1)` by
//! `φ_j = ⟨wt, α_j⟩ + ε_j = 0` and re-checked geometrically in debug builds.

use std::collections::HashMap;

use serde_json::{json, Map, Value};

use crate::polytope::{self, GgmsDatum, PseudoWeylPolytope};
use crate::rootdata::{Coweight, Move, MoveKind, ReducedWord, WeylElt, WeylGroup};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Lusztig data and moves
// ---------------------------------------------------------------------------

/// Edge lengths of an MV datum along one reduced word of `w0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LusztigDatum {
    word: ReducedWord,
    n: Vec<i64>,
}

impl LusztigDatum {
    pub fn new(group: &WeylGroup, word: ReducedWord, n: Vec<i64>) -> Result<LusztigDatum> {
        if word.target() != group.longest() {
            return Err(Error::Config {
                field: "word".into(),
                message: "Lusztig data live on reduced words of w0".into(),
            });
        }
        if n.len() != word.len() || n.iter().any(|&v| v < 0) {
            return Err(Error::Config {
                field: "lengths".into(),
                message: "need one nonnegative length per letter".into(),
            });
        }
        Ok(LusztigDatum { word, n })
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn lengths(&self) -> &[i64] {
        &self.n
    }
}

/// Applies a 2- or 3-move to an edge-length vector, returning the target
/// word letters and transformed lengths.
fn apply_move_raw(
    group: &WeylGroup,
    letters: &[u8],
    n: &[i64],
    mv: Move,
) -> Option<(Vec<u8>, Vec<i64>)> {
    let k = mv.k;
    let mut w = letters.to_vec();
    let mut m = n.to_vec();
    match mv.kind {
        MoveKind::Two => {
            if k + 1 >= w.len() {
                return None;
            }
            let (i, j) = (w[k] as usize, w[k + 1] as usize);
            if i == j || group.cartan().entry(i, j) != 0 {
                return None;
            }
            w.swap(k, k + 1);
            m.swap(k, k + 1);
        }
        MoveKind::Three => {
            if k + 2 >= w.len() {
                return None;
            }
            let (i, j) = (w[k] as usize, w[k + 1] as usize);
            if i == j || w[k + 2] != w[k] || group.cartan().entry(i, j) != -1 {
                return None;
            }
            w[k] = j as u8;
            w[k + 1] = i as u8;
            w[k + 2] = j as u8;
            let t = m[k].min(m[k + 2]);
            let (a, b, c) = (m[k], m[k + 1], m[k + 2]);
            m[k] = b + c - t;
            m[k + 1] = t;
            m[k + 2] = a + b - t;
        }
    }
    Some((w, m))
}

/// Transports a Lusztig datum across one move.
pub fn apply_move(group: &WeylGroup, datum: &LusztigDatum, mv: Move) -> Result<LusztigDatum> {
    let (letters, n) =
        apply_move_raw(group, datum.word.letters(), &datum.n, mv).ok_or_else(|| {
            Error::InvalidMove {
                move_desc: mv.to_string(),
                word: group.word_to_string(datum.word.letters()),
            }
        })?;
    let word = group
        .try_reduced_word(&letters)
        .expect("moves preserve reduced words of w0");
    Ok(LusztigDatum { word, n })
}

/// Transports an edge-length vector to every word of `R(w0)`, checking
/// consistency around every cycle traversed by the breadth-first sweep.
fn transport_all(group: &WeylGroup, datum: &LusztigDatum) -> Result<Vec<Vec<i64>>> {
    let mg = group.move_graph();
    let start = mg
        .word_index(datum.word.letters())
        .expect("reduced word of w0 is in the move graph");
    let mut ns: Vec<Option<Vec<i64>>> = vec![None; mg.len()];
    ns[start] = Some(datum.n.clone());
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let current = ns[v].clone().unwrap();
        let letters = mg.words()[v].letters().to_vec();
        for &(t, mv) in mg.neighbors(v) {
            let (_, moved) = apply_move_raw(group, &letters, &current, mv)
                .expect("move-graph edges always apply");
            match &ns[t] {
                None => {
                    ns[t] = Some(moved);
                    queue.push_back(t);
                }
                Some(existing) => {
                    if *existing != moved {
                        return Err(Error::InconsistentTransport {
                            word: group.word_to_string(mg.words()[t].letters()),
                        });
                    }
                }
            }
        }
    }
    Ok(ns
        .into_iter()
        .map(|n| n.expect("move graph is connected"))
        .collect())
}

// ---------------------------------------------------------------------------
// MV polytopes
// ---------------------------------------------------------------------------

/// An MV polytope of highest vertex `λ`: an MV datum with `μ_{w0} = λ`
/// contained in `Conv(W·λ)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MvPolytope {
    poly: PseudoWeylPolytope,
    lambda: Coweight,
}

impl MvPolytope {
    /// The highest-weight polytope `P_λ = {λ}`.
    pub fn highest(group: &WeylGroup, lambda: &Coweight) -> Result<MvPolytope> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        Ok(MvPolytope {
            poly: PseudoWeylPolytope::new(GgmsDatum::constant(group, lambda)),
            lambda: lambda.clone(),
        })
    }

    /// Integrates a Lusztig datum into the full GGMS datum: transports the
    /// lengths to every reduced word and anchors every chain at
    /// `μ_{w0} = λ`. Fails with `OutsideHull` exactly when the lengths are
    /// not a Lusztig datum for `MV(λ)`.
    pub fn from_lusztig(
        group: &WeylGroup,
        lambda: &Coweight,
        datum: &LusztigDatum,
    ) -> Result<MvPolytope> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        let ns = transport_all(group, datum)?;
        let mg = group.move_graph();
        let mut mu: Vec<Option<Coweight>> = vec![None; group.size()];
        for (wi, word) in mg.words().iter().enumerate() {
            let chain = group.prefixes(word);
            let n = &ns[wi];
            let mut v = lambda.clone();
            mu[group.longest().index()] = Some(lambda.clone());
            for l in (1..=word.len()).rev() {
                let j = word.letters()[l - 1] as usize;
                let dir = group.act(chain[l - 1], &group.cartan().coroot(j));
                v = v.sub(&dir.scaled(n[l - 1]));
                let w = chain[l - 1];
                match &mu[w.index()] {
                    None => mu[w.index()] = Some(v.clone()),
                    Some(existing) => {
                        if *existing != v {
                            return Err(Error::InconsistentTransport {
                                word: group.word_to_string(word.letters()),
                            });
                        }
                    }
                }
            }
        }
        let mu: Vec<Coweight> = mu.into_iter().map(|v| v.expect("chains cover W")).collect();
        for w in group.all() {
            if !polytope::in_worbit_hull(group, &mu[w.index()], lambda)? {
                return Err(Error::OutsideHull {
                    chamber: group.elt_string(w),
                });
            }
        }
        Ok(MvPolytope {
            poly: PseudoWeylPolytope::new(GgmsDatum::new(group, mu)?),
            lambda: lambda.clone(),
        })
    }

    /// Wraps an existing datum after checking all MV(λ) conditions; used by
    /// deserialization.
    pub fn from_parts(
        group: &WeylGroup,
        datum: GgmsDatum,
        lambda: &Coweight,
    ) -> Result<MvPolytope> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        if datum.vertex(group.longest()) != lambda {
            return Err(Error::Config {
                field: "datum".into(),
                message: "highest vertex differs from lambda".into(),
            });
        }
        if !is_mv_datum(group, &datum) {
            return Err(Error::Config {
                field: "datum".into(),
                message: "2-/3-move relations fail".into(),
            });
        }
        for w in group.all() {
            if !polytope::in_worbit_hull(group, datum.vertex(w), lambda)? {
                return Err(Error::OutsideHull {
                    chamber: group.elt_string(w),
                });
            }
        }
        Ok(MvPolytope {
            poly: PseudoWeylPolytope::new(datum),
            lambda: lambda.clone(),
        })
    }

    pub fn lambda(&self) -> &Coweight {
        &self.lambda
    }

    pub fn datum(&self) -> &GgmsDatum {
        self.poly.datum()
    }

    pub fn polytope(&self) -> &PseudoWeylPolytope {
        &self.poly
    }

    pub fn vertex(&self, w: WeylElt) -> &Coweight {
        self.poly.vertex(w)
    }

    /// `wt(P) = μ_e`.
    pub fn wt(&self, group: &WeylGroup) -> &Coweight {
        self.poly.vertex(group.identity())
    }

    /// `ε_j(P)`: the coefficient in `μ_{s_j} − μ_e = ε_j(P)·h_j`.
    pub fn epsilon(&self, group: &WeylGroup, j: usize) -> i64 {
        let diff = self.poly.vertex(group.gen(j)).sub(self.wt(group));
        let eps = diff.coords[j] / 2;
        debug_assert_eq!(diff, group.cartan().coroot(j).scaled(eps));
        eps
    }

    /// `φ_j(P) = ⟨wt(P), α_j⟩ + ε_j(P)`.
    pub fn phi(&self, group: &WeylGroup, j: usize) -> i64 {
        let phi = self.wt(group).pairing(j) + self.epsilon(group, j);
        debug_assert!(phi >= 0, "string property");
        phi
    }

    /// Edge lengths on a reduced word of `w0`.
    pub fn lusztig(&self, group: &WeylGroup, word: &ReducedWord) -> LusztigDatum {
        let n = polytope::edge_lengths(group, self.datum(), word)
            .expect("MV polytopes carry valid edge lengths on every word");
        LusztigDatum {
            word: word.clone(),
            n,
        }
    }

    fn shifted_on_word(&self, group: &WeylGroup, j: usize, delta: i64) -> Result<MvPolytope> {
        let wi = group.first_word_starting_with(j);
        let word = group.move_graph().words()[wi].clone();
        let mut datum = self.lusztig(group, &word);
        datum.n[0] += delta;
        debug_assert!(datum.n[0] >= 0);
        MvPolytope::from_lusztig(group, &self.lambda, &datum)
    }

    /// Lowering operator `f_j`. Nullity is decided by `φ_j = 0`; debug builds
    /// re-check that this agrees with the geometric hull-exit criterion.
    pub fn f(&self, group: &WeylGroup, j: usize) -> Option<MvPolytope> {
        if self.phi(group, j) == 0 {
            debug_assert!(matches!(
                self.f_geometric(group, j),
                Err(Error::OutsideHull { .. })
            ));
            return None;
        }
        let next = self
            .shifted_on_word(group, j, 1)
            .expect("phi_j > 0 keeps f_j P inside Conv(W·λ)");
        Some(next)
    }

    /// The geometric route for `f_j`: rebuild unconditionally and let the
    /// hull test decide. Kept as the oracle for the `φ_j = 0` shortcut.
    pub fn f_geometric(&self, group: &WeylGroup, j: usize) -> Result<MvPolytope> {
        self.shifted_on_word(group, j, 1)
    }

    /// Raising operator `e_j`; `None` iff `ε_j = 0` (i.e. `μ_e = μ_{s_j}`).
    pub fn e(&self, group: &WeylGroup, j: usize) -> Option<MvPolytope> {
        if self.epsilon(group, j) == 0 {
            return None;
        }
        let prev = self
            .shifted_on_word(group, j, -1)
            .expect("e_j stays inside Conv(W·λ)");
        Some(prev)
    }

    /// Height of `λ − wt(P)` (the number of lowering steps from `P_λ`).
    pub fn depth(&self, group: &WeylGroup) -> i64 {
        let diff = self.lambda.sub(self.wt(group));
        let coords = group.cartan().coroot_coords(&diff);
        let mut total = 0i64;
        for c in coords {
            debug_assert!(c.is_integer());
            total += c.to_integer();
        }
        total
    }
}

/// Whether a GGMS datum satisfies the 2-move and 3-move relations across the
/// whole move graph.
pub fn is_mv_datum(group: &WeylGroup, datum: &GgmsDatum) -> bool {
    let mg = group.move_graph();
    let mut lengths = Vec::with_capacity(mg.len());
    for word in mg.words() {
        match polytope::edge_lengths(group, datum, word) {
            Ok(n) => lengths.push(n),
            Err(_) => return false,
        }
    }
    for (wi, word) in mg.words().iter().enumerate() {
        for &(ti, mv) in mg.neighbors(wi) {
            let (_, moved) = apply_move_raw(group, word.letters(), &lengths[wi], mv)
                .expect("move-graph edges always apply");
            if moved != lengths[ti] {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Crystal generation
// ---------------------------------------------------------------------------

/// The crystal graph on `MV(λ)`: closure of `P_λ` under all `f_j`, with
/// nodes in the canonical `(depth, Lusztig datum on the base word)` order.
pub struct MvCrystal {
    lambda: Coweight,
    nodes: Vec<MvPolytope>,
    f_edges: Vec<Vec<Option<usize>>>,
    e_edges: Vec<Vec<Option<usize>>>,
    index: HashMap<GgmsDatum, usize>,
}

impl MvCrystal {
    pub fn generate(group: &WeylGroup, lambda: &Coweight) -> Result<MvCrystal> {
        let top = MvPolytope::highest(group, lambda)?;
        let mut nodes = vec![top];
        let mut seen: HashMap<GgmsDatum, usize> = HashMap::new();
        seen.insert(nodes[0].datum().clone(), 0);
        let mut head = 0;
        while head < nodes.len() {
            for j in 0..group.rank() {
                if let Some(child) = nodes[head].f(group, j) {
                    if !seen.contains_key(child.datum()) {
                        seen.insert(child.datum().clone(), nodes.len());
                        nodes.push(child);
                    }
                }
            }
            head += 1;
        }

        // Canonical order: by depth, then by Lusztig datum on the base word.
        let base = group.move_graph().words()[0].clone();
        nodes.sort_by_cached_key(|p| (p.depth(group), p.lusztig(group, &base).n));
        let index: HashMap<GgmsDatum, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.datum().clone(), i))
            .collect();

        let mut f_edges = vec![vec![None; group.rank()]; nodes.len()];
        let mut e_edges = vec![vec![None; group.rank()]; nodes.len()];
        for (i, p) in nodes.iter().enumerate() {
            for j in 0..group.rank() {
                if let Some(child) = p.f(group, j) {
                    let t = index[child.datum()];
                    f_edges[i][j] = Some(t);
                    e_edges[t][j] = Some(i);
                }
            }
        }
        Ok(MvCrystal {
            lambda: lambda.clone(),
            nodes,
            f_edges,
            e_edges,
            index,
        })
    }

    pub fn lambda(&self) -> &Coweight {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &MvPolytope {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[MvPolytope] {
        &self.nodes
    }

    pub fn node_index(&self, datum: &GgmsDatum) -> Option<usize> {
        self.index.get(datum).copied()
    }

    pub fn f_idx(&self, i: usize, j: usize) -> Option<usize> {
        self.f_edges[i][j]
    }

    pub fn e_idx(&self, i: usize, j: usize) -> Option<usize> {
        self.e_edges[i][j]
    }

    /// Index of `P_λ`.
    pub fn highest(&self) -> usize {
        0
    }

    /// Index of the lowest element `P_{w0·λ} = Conv(W·λ)`: the unique sink.
    pub fn lowest(&self, group: &WeylGroup) -> usize {
        let sinks: Vec<usize> = (0..self.len())
            .filter(|&i| (0..group.rank()).all(|j| self.f_edges[i][j].is_none()))
            .collect();
        assert_eq!(sinks.len(), 1, "MV(λ) has a unique lowest element");
        sinks[0]
    }

    /// Weight multiset of the crystal.
    pub fn weight_multiset(
        &self,
        group: &WeylGroup,
    ) -> std::collections::BTreeMap<Coweight, usize> {
        let mut out = std::collections::BTreeMap::new();
        for p in &self.nodes {
            *out.entry(p.wt(group).clone()).or_insert(0) += 1;
        }
        out
    }

    /// Graphviz DOT rendering; node labels carry the weight and the Lusztig
    /// datum on the base word, edges the generator index.
    pub fn to_dot(&self, group: &WeylGroup) -> String {
        let base = group.move_graph().words()[0].clone();
        let mut out = String::from("digraph mv_crystal {\n  rankdir=TB;\n");
        out.push_str(&format!(
            "  label=\"MV(lambda) cartan={} lambda={}\";\n  node [shape=box];\n",
            group.cartan().descriptor(),
            self.lambda
        ));
        for (i, p) in self.nodes.iter().enumerate() {
            let n = p.lusztig(group, &base);
            out.push_str(&format!(
                "  n{} [label=\"wt={}\\nn={:?}\"];\n",
                i,
                p.wt(group),
                n.lengths()
            ));
        }
        for (i, row) in self.f_edges.iter().enumerate() {
            for (j, target) in row.iter().enumerate() {
                if let Some(t) = target {
                    out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", i, t, j + 1));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON dump of the crystal; see `docs/formats.md`.
    pub fn to_json(&self, group: &WeylGroup) -> Value {
        let base = group.move_graph().words()[0].clone();
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut obj = Map::new();
                obj.insert("id".into(), json!(i));
                obj.insert("weight".into(), json!(p.wt(group).coords));
                obj.insert("lusztig".into(), json!(p.lusztig(group, &base).lengths()));
                obj.insert("datum".into(), p.datum().to_json(group));
                Value::Object(obj)
            })
            .collect();
        let mut edges = Vec::new();
        for (i, row) in self.f_edges.iter().enumerate() {
            for (j, target) in row.iter().enumerate() {
                if let Some(t) = target {
                    edges.push(json!({"from": i, "to": t, "j": j + 1}));
                }
            }
        }
        json!({
            "cartan": group.cartan().descriptor(),
            "lambda": self.lambda.coords,
            "base_word": group.word_to_string(base.letters()),
            "nodes": nodes,
            "edges": edges,
        })
    }

    /// Re-imports a crystal dump, revalidating every node and every edge.
    pub fn from_json(group: &WeylGroup, value: &Value) -> Result<MvCrystal> {
        let bad = |msg: &str| Error::Config {
            field: "crystal".into(),
            message: msg.into(),
        };
        let lambda =
            Coweight::new(serde_json::from_value(value["lambda"].clone()).map_err(Error::Json)?);
        let node_vals = value["nodes"]
            .as_array()
            .ok_or_else(|| bad("missing nodes"))?;
        let mut nodes = Vec::with_capacity(node_vals.len());
        for nv in node_vals {
            let datum = GgmsDatum::from_json(group, &nv["datum"])?;
            nodes.push(MvPolytope::from_parts(group, datum, &lambda)?);
        }
        let rebuilt = MvCrystal::generate(group, &lambda)?;
        if rebuilt.len() != nodes.len()
            || nodes
                .iter()
                .enumerate()
                .any(|(i, p)| rebuilt.node(i).datum() != p.datum())
        {
            return Err(bad("nodes differ from the canonical crystal of lambda"));
        }
        Ok(rebuilt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> WeylGroup {
        WeylGroup::parse("A2").unwrap()
    }

    fn lusztig(g: &WeylGroup, letters: &[u8], n: &[i64]) -> LusztigDatum {
        LusztigDatum::new(g, g.try_reduced_word(letters).unwrap(), n.to_vec()).unwrap()
    }

    #[test]
    fn three_move_formula() {
        let g = a2();
        let mv = Move {
            kind: MoveKind::Three,
            k: 0,
        };
        let d = lusztig(&g, &[0, 1, 0], &[1, 0, 0]);
        let moved = apply_move(&g, &d, mv).unwrap();
        assert_eq!(moved.word().letters(), &[1, 0, 1]);
        assert_eq!(moved.lengths(), &[0, 0, 1]);
        // involution
        let back = apply_move(&g, &moved, mv).unwrap();
        assert_eq!(back, d);
        // a = c case: (a,b,a) -> (b, a, b)
        let d2 = lusztig(&g, &[0, 1, 0], &[3, 5, 3]);
        let m2 = apply_move(&g, &d2, mv).unwrap();
        assert_eq!(m2.lengths(), &[5, 3, 5]);
        assert_eq!(apply_move(&g, &m2, mv).unwrap(), d2);
    }

    #[test]
    fn two_move_swaps() {
        let g = WeylGroup::parse("A1xA1").unwrap();
        let d = lusztig(&g, &[0, 1], &[4, 7]);
        let mv = Move {
            kind: MoveKind::Two,
            k: 0,
        };
        let moved = apply_move(&g, &d, mv).unwrap();
        assert_eq!(moved.word().letters(), &[1, 0]);
        assert_eq!(moved.lengths(), &[7, 4]);
    }

    #[test]
    fn invalid_move_rejected() {
        let g = a2();
        let d = lusztig(&g, &[0, 1, 0], &[1, 1, 1]);
        assert!(matches!(
            apply_move(
                &g,
                &d,
                Move {
                    kind: MoveKind::Two,
                    k: 0
                }
            ),
            Err(Error::InvalidMove { .. })
        ));
    }

    #[test]
    fn zero_lusztig_gives_point() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let p =
            MvPolytope::from_lusztig(&g, &lambda, &lusztig(&g, &[0, 1, 0], &[0, 0, 0])).unwrap();
        assert_eq!(p, MvPolytope::highest(&g, &lambda).unwrap());
        assert!(is_mv_datum(&g, p.datum()));
    }

    #[test]
    fn a1_segment() {
        let g = WeylGroup::parse("A1").unwrap();
        let lambda = Coweight::new(vec![2]);
        let p = MvPolytope::from_lusztig(&g, &lambda, &lusztig(&g, &[0], &[1])).unwrap();
        assert_eq!(p.vertex(g.identity()), &Coweight::new(vec![0]));
        assert_eq!(p.vertex(g.longest()), &lambda);
    }

    #[test]
    fn a1_string_terminates() {
        // ⟨λ, α⟩ = 1: f(P_λ) is the unit segment and f² dies
        let g = WeylGroup::parse("A1").unwrap();
        let lambda = Coweight::new(vec![1]);
        let top = MvPolytope::highest(&g, &lambda).unwrap();
        let seg = top.f(&g, 0).unwrap();
        assert_eq!(seg.vertex(g.identity()), &Coweight::new(vec![-1]));
        assert_eq!(seg.vertex(g.longest()), &lambda);
        assert!(seg.f(&g, 0).is_none());
    }

    #[test]
    fn unit_hexagon_is_orbit_hull() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let hex =
            MvPolytope::from_lusztig(&g, &lambda, &lusztig(&g, &[0, 1, 0], &[1, 1, 1])).unwrap();
        for w in g.all() {
            assert_eq!(hex.vertex(w), &g.act(g.mul(w, g.longest()), &lambda));
        }
        // (2,2,2) leaves Conv(W·λ) for λ=(1,1)
        assert!(matches!(
            MvPolytope::from_lusztig(&g, &lambda, &lusztig(&g, &[0, 1, 0], &[2, 2, 2])),
            Err(Error::OutsideHull { .. })
        ));
        // ... but is the lowest polytope for 2λ
        let hex2 =
            MvPolytope::from_lusztig(&g, &lambda.scaled(2), &lusztig(&g, &[0, 1, 0], &[2, 2, 2]))
                .unwrap();
        assert_eq!(hex2.wt(&g), &lambda.scaled(-2));
    }

    #[test]
    fn ggms_but_not_mv() {
        // Hand-built A2 datum violating the 3-move relation: chain (1,2,1)
        // carries lengths (1,0,1) but chain (2,1,2) carries (1,0,1) instead
        // of the transported (0,1,0).
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let h1 = g.cartan().coroot(0);
        let h2 = g.cartan().coroot(1);
        let s1 = g.gen(0);
        let s2 = g.gen(1);
        let mut mu = vec![Coweight::zero(2); g.size()];
        mu[g.longest().index()] = lambda.clone();
        mu[g.mul(s1, s2).index()] = lambda.sub(&h2);
        mu[s1.index()] = lambda.sub(&h2);
        mu[g.identity().index()] = lambda.sub(&h1).sub(&h2);
        mu[s2.index()] = lambda.sub(&h1);
        mu[g.mul(s2, s1).index()] = lambda.sub(&h1);
        let datum = GgmsDatum::new(&g, mu).unwrap();
        assert!(!is_mv_datum(&g, &datum));

        // the transported variant is an MV datum
        let good =
            MvPolytope::from_lusztig(&g, &lambda, &lusztig(&g, &[0, 1, 0], &[1, 0, 1])).unwrap();
        assert!(is_mv_datum(&g, good.datum()));
    }

    #[test]
    fn highest_weight_statistics() {
        let g = a2();
        let lambda = Coweight::new(vec![2, 3]);
        let top = MvPolytope::highest(&g, &lambda).unwrap();
        assert_eq!(top.wt(&g), &lambda);
        for j in 0..2 {
            assert_eq!(top.epsilon(&g, j), 0);
            assert_eq!(top.phi(&g, j), lambda.pairing(j));
            assert!(top.e(&g, j).is_none());
        }
    }

    #[test]
    fn crystal_axioms_under_f() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let crystal = MvCrystal::generate(&g, &lambda).unwrap();
        for p in crystal.nodes() {
            for j in 0..2 {
                if let Some(q) = p.f(&g, j) {
                    assert_eq!(q.epsilon(&g, j), p.epsilon(&g, j) + 1);
                    assert_eq!(q.phi(&g, j), p.phi(&g, j) - 1);
                    assert_eq!(q.wt(&g), &p.wt(&g).sub(&g.cartan().coroot(j)));
                    assert_eq!(q.e(&g, j).as_ref(), Some(p));
                }
                if let Some(q) = p.e(&g, j) {
                    assert_eq!(q.f(&g, j).as_ref(), Some(p));
                }
            }
        }
    }

    #[test]
    fn f_is_word_independent() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let crystal = MvCrystal::generate(&g, &lambda).unwrap();
        for p in crystal.nodes() {
            for j in 0..2 {
                // rebuild via every word starting with j and compare
                let expected = p.f(&g, j);
                for (wi, word) in g.move_graph().words().iter().enumerate() {
                    if word.letters()[0] != j as u8 {
                        continue;
                    }
                    let _ = wi;
                    let mut n = p.lusztig(&g, word);
                    n.n[0] += 1;
                    let rebuilt = MvPolytope::from_lusztig(&g, &lambda, &n).ok();
                    match &expected {
                        Some(q) => assert_eq!(rebuilt.as_ref(), Some(q)),
                        None => assert!(rebuilt.is_none()),
                    }
                }
            }
        }
    }

    #[test]
    fn small_crystals() {
        let g = a2();
        assert_eq!(
            MvCrystal::generate(&g, &Coweight::zero(2)).unwrap().len(),
            1
        );

        let c3 = MvCrystal::generate(&g, &Coweight::new(vec![1, 0])).unwrap();
        assert_eq!(c3.len(), 3);
        // chain: f1 then f2
        assert_eq!(c3.f_idx(0, 0), Some(1));
        assert_eq!(c3.f_idx(0, 1), None);
        assert_eq!(c3.f_idx(1, 1), Some(2));
        assert_eq!(c3.f_idx(1, 0), None);

        let c8 = MvCrystal::generate(&g, &Coweight::new(vec![1, 1])).unwrap();
        assert_eq!(c8.len(), 8);
        let zero_fiber = c8.nodes().iter().filter(|p| p.wt(&g).is_zero()).count();
        assert_eq!(zero_fiber, 2);
        // lowest element is Conv(W·λ)
        let low = c8.node(c8.lowest(&g));
        for w in g.all() {
            assert_eq!(low.vertex(w), &g.act(g.mul(w, g.longest()), c8.lambda()));
        }
        // every node is a valid MV datum with highest vertex λ
        for p in c8.nodes() {
            assert!(is_mv_datum(&g, p.datum()));
            assert_eq!(p.vertex(g.longest()), c8.lambda());
        }
    }

    #[test]
    fn phi_nullity_matches_geometry() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let crystal = MvCrystal::generate(&g, &lambda).unwrap();
        for p in crystal.nodes() {
            for j in 0..2 {
                let geometric = p.f_geometric(&g, j);
                match p.phi(&g, j) {
                    0 => assert!(matches!(geometric, Err(Error::OutsideHull { .. }))),
                    _ => assert!(geometric.is_ok()),
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = a2();
        let lambda = Coweight::new(vec![1, 1]);
        let crystal = MvCrystal::generate(&g, &lambda).unwrap();
        let v = crystal.to_json(&g);
        let back = MvCrystal::from_json(&g, &v).unwrap();
        assert_eq!(back.len(), crystal.len());
        for i in 0..crystal.len() {
            assert_eq!(back.node(i), crystal.node(i));
        }
    }

    #[test]
    fn dot_export_mentions_every_node() {
        let g = a2();
        let crystal = MvCrystal::generate(&g, &Coweight::new(vec![1, 0])).unwrap();
        let dot = crystal.to_dot(&g);
        assert!(dot.starts_with("digraph"));
        for i in 0..crystal.len() {
            assert!(dot.contains(&format!("n{i} [label=")));
        }
        assert_eq!(dot.matches("->").count(), 2);
    }
}
