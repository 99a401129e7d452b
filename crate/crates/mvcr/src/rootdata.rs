//! Simply-laced root-system and Weyl-group kernel.
//!
//! The group is enumerated once, in exact integer arithmetic, as a set of
//! permutations of the (finite) root set. Elements are handed out as
//! [`WeylElt`] indices into that table; the index order is the canonical
//! `(length, ShortLex word)` order, so sorting by `WeylElt` is already the
//! deterministic report order used everywhere else in the crate.
//!
//! Coweights live in the fundamental-coweight basis: `⟨v, α_j⟩` is a plain
//! coordinate read, the simple coroot `h_i` is row `i` of the Cartan matrix,
//! and coroot-basis coordinates are exact rationals solved against `Aᵀ`.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact rational scalar used for coroot coordinates and hull tests.
pub type Rat = Ratio<i64>;

// ---------------------------------------------------------------------------
// Cartan data
// ---------------------------------------------------------------------------

/// A validated simply-laced Cartan matrix of finite type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    descriptor: String,
    a: Vec<Vec<i64>>,
    /// `(Aᵀ)⁻¹`, used to convert fundamental-coweight coordinates to exact
    /// coroot-basis coordinates.
    a_inv_t: Vec<Vec<Rat>>,
}

impl CartanDatum {
    /// Builds a Cartan datum from a type string such as `"A2"`, `"D4"` or
    /// `"A1xA1"` (components joined by `x`), or from an explicit JSON
    /// matrix such as `"[[2,-1],[-1,2]]"`.
    pub fn parse(spec: &str) -> Result<CartanDatum> {
        if spec.trim_start().starts_with('[') {
            let a: Vec<Vec<i64>> = serde_json::from_str(spec)
                .map_err(|e| Error::NotFiniteType(format!("cannot parse matrix literal: {e}")))?;
            return Self::from_matrix(a);
        }
        let mut blocks: Vec<Vec<Vec<i64>>> = Vec::new();
        for part in spec.split('x') {
            blocks.push(component_matrix(part.trim())?);
        }
        if blocks.is_empty() {
            return Err(Error::NotFiniteType(format!("empty spec `{spec}`")));
        }
        let rank: usize = blocks.iter().map(|b| b.len()).sum();
        let mut a = vec![vec![0i64; rank]; rank];
        let mut off = 0;
        for b in &blocks {
            for i in 0..b.len() {
                for j in 0..b.len() {
                    a[off + i][off + j] = b[i][j];
                }
            }
            off += b.len();
        }
        Self::from_matrix_with_descriptor(a, spec.trim().to_string())
    }

    /// Builds a Cartan datum from an explicit matrix.
    pub fn from_matrix(a: Vec<Vec<i64>>) -> Result<CartanDatum> {
        let desc = format!("matrix{a:?}");
        Self::from_matrix_with_descriptor(a, desc)
    }

    fn from_matrix_with_descriptor(a: Vec<Vec<i64>>, descriptor: String) -> Result<CartanDatum> {
        let n = a.len();
        if n == 0 || a.iter().any(|row| row.len() != n) {
            return Err(Error::NotFiniteType("matrix is empty or not square".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::NotFiniteType(format!(
                    "a[{i}][{i}] = {} != 2",
                    a[i][i]
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return Err(Error::NotFiniteType(format!(
                        "off-diagonal a[{i}][{j}] = {} must be <= 0",
                        a[i][j]
                    )));
                }
                if a[i][j] != a[j][i] || a[i][j] < -1 {
                    return Err(Error::NonSimplyLaced(format!(
                        "a[{i}][{j}] = {}, a[{j}][{i}] = {}",
                        a[i][j], a[j][i]
                    )));
                }
            }
        }
        // Finite type == positive definite (Sylvester: all leading minors > 0).
        for k in 1..=n {
            let minor: Vec<Vec<i128>> = (0..k)
                .map(|i| (0..k).map(|j| a[i][j] as i128).collect())
                .collect();
            if bareiss_det(minor) <= 0 {
                return Err(Error::NotFiniteType(format!(
                    "leading {k}x{k} minor is not positive"
                )));
            }
        }
        let a_t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        let a_inv_t = invert_rat(&a_t);
        Ok(CartanDatum {
            descriptor,
            a,
            a_inv_t,
        })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// The type string or matrix literal this datum was built from.
    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// Simple coroot `h_i` in the fundamental-coweight basis (row `i` of `A`).
    pub fn coroot(&self, i: usize) -> Coweight {
        Coweight {
            coords: self.a[i].clone(),
        }
    }

    /// Exact coroot-basis coordinates of a coweight: solves `v = Aᵀ c`.
    pub fn coroot_coords(&self, v: &Coweight) -> Vec<Rat> {
        self.coroot_coords_rat(
            &v.coords
                .iter()
                .map(|&c| Rat::from_integer(c))
                .collect::<Vec<_>>(),
        )
    }

    /// Coroot-basis coordinates of a rational point of `h_R`.
    pub fn coroot_coords_rat(&self, v: &[Rat]) -> Vec<Rat> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.a_inv_t[i][j] * v[j]).sum())
            .collect()
    }
}

fn component_matrix(part: &str) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::NotFiniteType(format!("cannot parse component `{part}`"));
    let mut chars = part.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    match letter {
        'A' | 'a' => {
            if n == 0 {
                return Err(bad());
            }
            Ok(chain(n))
        }
        'D' | 'd' => {
            if n < 3 {
                return Err(Error::NotFiniteType(format!(
                    "`{part}`: D requires rank >= 3 (use A1xA1 / A3 for the small cases)"
                )));
            }
            let mut m = chain(n);
            // Node n attaches to node n-2 instead of n-1.
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            Ok(m)
        }
        'E' | 'e' => {
            if !(6..=8).contains(&n) {
                return Err(Error::NotFiniteType(format!(
                    "`{part}`: E requires rank 6..8"
                )));
            }
            // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4.
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 2;
            }
            let mut link = |i: usize, j: usize| {
                m[i][j] = -1;
                m[j][i] = -1;
            };
            link(0, 2);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
            link(1, 3);
            Ok(m)
        }
        'B' | 'C' | 'F' | 'G' | 'b' | 'c' | 'f' | 'g' => {
            Err(Error::NonSimplyLaced(format!("type `{part}`")))
        }
        _ => Err(bad()),
    }
}

fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut prev = 1i128;
    let mut sign = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn invert_rat(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Rat::from_integer(m[i][j])
                    } else {
                        Rat::from_integer(i64::from(j - n == i))
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| aug[r][col] != Rat::from_integer(0))
            .expect("validated Cartan matrix is invertible");
        aug.swap(col, pivot);
        let p = aug[col][col];
        for v in aug[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && aug[r][col] != Rat::from_integer(0) {
                let f = aug[r][col];
                for j in 0..2 * n {
                    let sub = f * aug[col][j];
                    aug[r][j] -= sub;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

// ---------------------------------------------------------------------------
// Coweights
// ---------------------------------------------------------------------------

/// An integral coweight in the fundamental-coweight basis, so that
/// `⟨v, α_j⟩ = v.coords[j]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coweight {
    pub coords: Vec<i64>,
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Coweight {
        Coweight { coords }
    }

    pub fn zero(rank: usize) -> Coweight {
        Coweight {
            coords: vec![0; rank],
        }
    }

    /// `⟨v, α_j⟩`.
    pub fn pairing(&self, j: usize) -> i64 {
        self.coords[j]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, n: i64) -> Coweight {
        Coweight {
            coords: self.coords.iter().map(|c| c * n).collect(),
        }
    }

    pub fn to_rat(&self) -> Vec<Rat> {
        self.coords.iter().map(|&c| Rat::from_integer(c)).collect()
    }
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Weyl group
// ---------------------------------------------------------------------------

/// Handle to a Weyl group element. Indices follow the canonical
/// `(length, ShortLex)` enumeration order of the owning [`WeylGroup`], so the
/// derived `Ord` is the deterministic report order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElt(u32);

impl WeylElt {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A reduced word together with the element it evaluates to.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReducedWord {
    letters: Vec<u8>,
    target: WeylElt,
}

impl ReducedWord {
    /// 0-based generator indices.
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn target(&self) -> WeylElt {
        self.target
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A 2-move or 3-move between reduced words of `w0`, acting on positions
/// `k+1..` (0-based offset `k`).
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub k: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum MoveKind {
    Two,
    Three,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::Two => write!(f, "2-move@{}", self.k),
            MoveKind::Three => write!(f, "3-move@{}", self.k),
        }
    }
}

/// The graph on `R(w0)` whose edges are the 2- and 3-moves.
pub struct MoveGraph {
    words: Vec<ReducedWord>,
    index: HashMap<Vec<u8>, usize>,
    adj: Vec<Vec<(usize, Move)>>,
}

impl MoveGraph {
    /// All reduced words of `w0`, in lexicographic order.
    pub fn words(&self) -> &[ReducedWord] {
        &self.words
    }

    pub fn word_index(&self, letters: &[u8]) -> Option<usize> {
        self.index.get(letters).copied()
    }

    /// Moves applicable to word `i`, as `(target word index, move)`.
    pub fn neighbors(&self, i: usize) -> &[(usize, Move)] {
        &self.adj[i]
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// One cycle per non-tree edge of a breadth-first spanning tree, as
    /// `(base word index, move sequence)`; each sequence starts and ends at
    /// its base word. Moves are involutive, so tree edges are retraced with
    /// the same move labels.
    pub fn fundamental_cycles(&self) -> Vec<(usize, Vec<Move>)> {
        let n = self.len();
        let mut parent: Vec<Option<(usize, Move)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut tree: std::collections::HashSet<(usize, usize)> = Default::default();
        while let Some(v) = queue.pop_front() {
            for &(t, mv) in &self.adj[v] {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((v, mv));
                    tree.insert((v.min(t), v.max(t)));
                    queue.push_back(t);
                }
            }
        }
        let path_to_root = |mut u: usize| -> Vec<Move> {
            let mut moves = Vec::new();
            while let Some((p, mv)) = parent[u] {
                moves.push(mv);
                u = p;
            }
            moves
        };
        let mut cycles = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &(t, mv) in nbrs {
                if u >= t || tree.contains(&(u.min(t), u.max(t))) {
                    continue;
                }
                let mut moves = vec![mv];
                moves.extend(path_to_root(t));
                let down: Vec<Move> = path_to_root(u).into_iter().rev().collect();
                moves.extend(down);
                cycles.push((u, moves));
            }
        }
        cycles
    }
}

struct EltData {
    perm: Vec<u16>,
    word: Vec<u8>,
    inv: u32,
}

/// A fully enumerated finite Weyl group with memoized Bruhat order and move
/// graph. Intended for desk-scale groups (`|W| <= a few hundred`); all data
/// is immutable after construction.
pub struct WeylGroup {
    cartan: CartanDatum,
    roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    simple_idx: Vec<usize>,
    elements: Vec<EltData>,
    perm_index: HashMap<Vec<u16>, u32>,
    right_gen: Vec<u32>,
    bruhat_below: Vec<Vec<bool>>,
    move_graph: MoveGraph,
    first_word_with: Vec<usize>,
    w0: WeylElt,
}

impl WeylGroup {
    pub fn new(cartan: CartanDatum) -> WeylGroup {
        let rank = cartan.rank();

        // Enumerate all roots (integer vectors in the simple-root basis).
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut root_index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut simple_idx = Vec::with_capacity(rank);
        for j in 0..rank {
            let mut v = vec![0i64; rank];
            v[j] = 1;
            simple_idx.push(j);
            root_index.insert(v.clone(), j);
            roots.push(v);
        }
        let reflect_root = |cartan: &CartanDatum, j: usize, beta: &[i64]| -> Vec<i64> {
            let pair: i64 = (0..rank).map(|k| cartan.entry(j, k) * beta[k]).sum();
            let mut out = beta.to_vec();
            out[j] -= pair;
            out
        };
        let mut head = 0;
        while head < roots.len() {
            let beta = roots[head].clone();
            for j in 0..rank {
                let img = reflect_root(&cartan, j, &beta);
                if !root_index.contains_key(&img) {
                    root_index.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
            head += 1;
        }
        let nroots = roots.len();

        let gen_perm: Vec<Vec<u16>> = (0..rank)
            .map(|j| {
                (0..nroots)
                    .map(|r| root_index[&reflect_root(&cartan, j, &roots[r])] as u16)
                    .collect()
            })
            .collect();

        // Breadth-first enumeration; first discovery order is (length, ShortLex),
        // and the discovering word is the ShortLex-minimal reduced word.
        let id: Vec<u16> = (0..nroots as u16).collect();
        let mut elements = vec![EltData {
            perm: id.clone(),
            word: Vec::new(),
            inv: 0,
        }];
        let mut perm_index: HashMap<Vec<u16>, u32> = HashMap::new();
        perm_index.insert(id, 0);
        let mut right_gen: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for j in 0..rank {
                let perm: Vec<u16> = (0..nroots)
                    .map(|r| elements[head].perm[gen_perm[j][r] as usize])
                    .collect();
                let idx = match perm_index.get(&perm) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len() as u32;
                        let mut word = elements[head].word.clone();
                        word.push(j as u8);
                        perm_index.insert(perm.clone(), i);
                        elements.push(EltData { perm, word, inv: 0 });
                        i
                    }
                };
                right_gen.push(idx);
            }
            head += 1;
        }
        // right_gen was filled in element order: entry for (w, j) is at w*rank + j.

        for i in 0..elements.len() {
            let mut inv_perm = vec![0u16; nroots];
            for (r, &img) in elements[i].perm.iter().enumerate() {
                inv_perm[img as usize] = r as u16;
            }
            elements[i].inv = perm_index[&inv_perm];
        }

        let max_len = elements.iter().map(|e| e.word.len()).max().unwrap();
        let longest: Vec<usize> = (0..elements.len())
            .filter(|&i| elements[i].word.len() == max_len)
            .collect();
        assert_eq!(
            longest.len(),
            1,
            "finite Weyl group has a unique longest element"
        );
        let w0 = WeylElt(longest[0] as u32);

        let mut group = WeylGroup {
            cartan,
            roots,
            root_index,
            simple_idx,
            elements,
            perm_index,
            right_gen,
            bruhat_below: Vec::new(),
            move_graph: MoveGraph {
                words: Vec::new(),
                index: HashMap::new(),
                adj: Vec::new(),
            },
            first_word_with: Vec::new(),
            w0,
        };
        group.bruhat_below = group.build_bruhat();
        group.move_graph = group.build_move_graph();
        group.first_word_with = (0..rank)
            .map(|j| {
                group
                    .move_graph
                    .words
                    .iter()
                    .position(|w| w.letters.first() == Some(&(j as u8)))
                    .expect("every generator starts some reduced word of w0")
            })
            .collect();
        group
    }

    pub fn parse(spec: &str) -> Result<WeylGroup> {
        Ok(WeylGroup::new(CartanDatum::parse(spec)?))
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// `|W|`.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// All elements in the canonical `(length, ShortLex)` order.
    pub fn all(&self) -> impl Iterator<Item = WeylElt> {
        (0..self.elements.len() as u32).map(WeylElt)
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt(0)
    }

    pub fn longest(&self) -> WeylElt {
        self.w0
    }

    pub fn gen(&self, j: usize) -> WeylElt {
        self.right_mul_gen(WeylElt(0), j)
    }

    pub fn length(&self, w: WeylElt) -> usize {
        self.elements[w.index()].word.len()
    }

    /// ShortLex-minimal reduced word (0-based letters).
    pub fn word(&self, w: WeylElt) -> &[u8] {
        &self.elements[w.index()].word
    }

    pub fn right_mul_gen(&self, w: WeylElt, j: usize) -> WeylElt {
        WeylElt(self.right_gen[w.index() * self.rank() + j])
    }

    pub fn left_mul_gen(&self, j: usize, w: WeylElt) -> WeylElt {
        let mut acc = self.right_mul_gen(WeylElt(0), j);
        for &l in &self.elements[w.index()].word {
            acc = self.right_mul_gen(acc, l as usize);
        }
        acc
    }

    pub fn mul(&self, x: WeylElt, y: WeylElt) -> WeylElt {
        let mut acc = x;
        for &l in &self.elements[y.index()].word {
            acc = self.right_mul_gen(acc, l as usize);
        }
        acc
    }

    pub fn inv(&self, w: WeylElt) -> WeylElt {
        WeylElt(self.elements[w.index()].inv)
    }

    /// Evaluates an arbitrary (not necessarily reduced) word.
    pub fn eval_word(&self, letters: &[u8]) -> WeylElt {
        let mut acc = WeylElt(0);
        for &l in letters {
            acc = self.right_mul_gen(acc, l as usize);
        }
        acc
    }

    /// `ℓ(s_j w) < ℓ(w)`.
    pub fn is_left_descent(&self, j: usize, w: WeylElt) -> bool {
        // holds iff w^{-1}·α_j is a negative root
        let inv = self.elements[w.index()].inv as usize;
        let img = self.elements[inv].perm[self.simple_idx[j]] as usize;
        self.root_is_negative(img)
    }

    /// `ℓ(w s_j) < ℓ(w)`.
    pub fn is_right_descent(&self, w: WeylElt, j: usize) -> bool {
        let img = self.elements[w.index()].perm[self.simple_idx[j]] as usize;
        self.root_is_negative(img)
    }

    fn root_is_negative(&self, r: usize) -> bool {
        self.roots[r]
            .iter()
            .find(|&&c| c != 0)
            .map(|&c| c < 0)
            .unwrap_or(false)
    }

    /// Index of the root `w·α` given the index of `α`.
    pub fn root_image(&self, w: WeylElt, root: usize) -> usize {
        self.elements[w.index()].perm[root] as usize
    }

    pub fn simple_root(&self, j: usize) -> usize {
        self.simple_idx[j]
    }

    pub fn root_coords(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// The reflection `s_β ∈ W` for the root with index `r`.
    pub fn reflection(&self, r: usize) -> WeylElt {
        let rank = self.rank();
        let beta = &self.roots[r];
        let perm: Vec<u16> = (0..self.roots.len())
            .map(|g| {
                let gamma = &self.roots[g];
                // ⟨β∨, γ⟩ with β∨ the coroot of β (simply-laced: same coords)
                let pair: i64 = (0..rank)
                    .map(|j| {
                        beta[j]
                            * (0..rank)
                                .map(|k| self.cartan.entry(j, k) * gamma[k])
                                .sum::<i64>()
                    })
                    .sum();
                let img: Vec<i64> = (0..rank).map(|k| gamma[k] - pair * beta[k]).collect();
                self.root_index[&img] as u16
            })
            .collect();
        WeylElt(self.perm_index[&perm])
    }

    /// `w·v` for an integral coweight.
    pub fn act(&self, w: WeylElt, v: &Coweight) -> Coweight {
        let inv = self.elements[w.index()].inv as usize;
        let coords = (0..self.rank())
            .map(|j| {
                let r = self.elements[inv].perm[self.simple_idx[j]] as usize;
                self.roots[r]
                    .iter()
                    .zip(&v.coords)
                    .map(|(c, x)| c * x)
                    .sum()
            })
            .collect();
        Coweight { coords }
    }

    /// `w·v` for a rational point of `h_R` in fundamental-coweight coordinates.
    pub fn act_rat(&self, w: WeylElt, v: &[Rat]) -> Vec<Rat> {
        let inv = self.elements[w.index()].inv as usize;
        (0..self.rank())
            .map(|j| {
                let r = self.elements[inv].perm[self.simple_idx[j]] as usize;
                self.roots[r]
                    .iter()
                    .zip(v)
                    .map(|(&c, x)| Rat::from_integer(c) * x)
                    .sum()
            })
            .collect()
    }

    /// Strong Bruhat order, from the subword table built at construction.
    pub fn bruhat_leq(&self, x: WeylElt, y: WeylElt) -> bool {
        self.bruhat_below[y.index()][x.index()]
    }

    fn build_bruhat(&self) -> Vec<Vec<bool>> {
        let n = self.elements.len();
        let mut table = Vec::with_capacity(n);
        for y in 0..n {
            // Subword property on the fixed ShortLex word of y: the set of
            // elements with a reduced word occurring as a subword.
            let mut below = vec![false; n];
            below[0] = true;
            let mut members = vec![WeylElt(0)];
            for &l in &self.elements[y].word {
                let mut added = Vec::new();
                for &z in &members {
                    let zs = self.right_mul_gen(z, l as usize);
                    if self.length(zs) > self.length(z) && !below[zs.index()] {
                        below[zs.index()] = true;
                        added.push(zs);
                    }
                }
                members.extend(added);
            }
            table.push(below);
        }
        table
    }

    /// All reduced words of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: WeylElt) -> Vec<ReducedWord> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.reduced_words_rec(w, w, &mut prefix, &mut out);
        out
    }

    fn reduced_words_rec(
        &self,
        target: WeylElt,
        rest: WeylElt,
        prefix: &mut Vec<u8>,
        out: &mut Vec<ReducedWord>,
    ) {
        if rest == WeylElt(0) {
            out.push(ReducedWord {
                letters: prefix.clone(),
                target,
            });
            return;
        }
        for j in 0..self.rank() {
            if self.is_left_descent(j, rest) {
                prefix.push(j as u8);
                self.reduced_words_rec(target, self.left_mul_gen(j, rest), prefix, out);
                prefix.pop();
            }
        }
    }

    /// Promotes letters to a [`ReducedWord`], if the word is reduced.
    pub fn try_reduced_word(&self, letters: &[u8]) -> Option<ReducedWord> {
        let target = self.eval_word(letters);
        (self.length(target) == letters.len()).then(|| ReducedWord {
            letters: letters.to_vec(),
            target,
        })
    }

    /// Prefix chain `e = w_0, w_1, ..., w_ℓ = target` of a reduced word.
    pub fn prefixes(&self, word: &ReducedWord) -> Vec<WeylElt> {
        let mut out = Vec::with_capacity(word.len() + 1);
        let mut acc = WeylElt(0);
        out.push(acc);
        for &l in &word.letters {
            acc = self.right_mul_gen(acc, l as usize);
            out.push(acc);
        }
        out
    }

    pub fn move_graph(&self) -> &MoveGraph {
        &self.move_graph
    }

    /// Index (into `move_graph().words()`) of the ShortLex-least reduced word
    /// of `w0` starting with `j`.
    pub fn first_word_starting_with(&self, j: usize) -> usize {
        self.first_word_with[j]
    }

    fn build_move_graph(&self) -> MoveGraph {
        let words = self.reduced_words(self.w0);
        let index: HashMap<Vec<u8>, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters.clone(), i))
            .collect();
        let mut adj = vec![Vec::new(); words.len()];
        for (wi, w) in words.iter().enumerate() {
            let ls = &w.letters;
            let m = ls.len();
            for k in 0..m.saturating_sub(1) {
                let (i, j) = (ls[k] as usize, ls[k + 1] as usize);
                if i != j && self.cartan.entry(i, j) == 0 {
                    let mut t = ls.clone();
                    t.swap(k, k + 1);
                    let ti = index[&t];
                    adj[wi].push((
                        ti,
                        Move {
                            kind: MoveKind::Two,
                            k,
                        },
                    ));
                }
            }
            for k in 0..m.saturating_sub(2) {
                let (i, j) = (ls[k] as usize, ls[k + 1] as usize);
                if i != j && ls[k + 2] == ls[k] && self.cartan.entry(i, j) == -1 {
                    let mut t = ls.clone();
                    t[k] = j as u8;
                    t[k + 1] = i as u8;
                    t[k + 2] = j as u8;
                    let ti = index[&t];
                    adj[wi].push((
                        ti,
                        Move {
                            kind: MoveKind::Three,
                            k,
                        },
                    ));
                }
            }
        }
        // Tits: the move graph on R(w0) is connected.
        let mut seen = vec![false; words.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(t, _) in &adj[v] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        assert!(
            seen.iter().all(|&s| s),
            "move graph on R(w0) must be connected"
        );
        MoveGraph { words, index, adj }
    }

    /// Minimal-length coset representatives for `W / Stab_W(λ)`, in canonical
    /// order; bijective with the orbit `W·λ`.
    pub fn min_coset_reps(&self, lambda: &Coweight) -> Result<Vec<WeylElt>> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.coords.clone()));
        }
        let mut seen: HashMap<Coweight, ()> = HashMap::new();
        let mut reps = Vec::new();
        for w in self.all() {
            let p = self.act(w, lambda);
            if seen.insert(p, ()).is_none() {
                reps.push(w);
            }
        }
        Ok(reps)
    }

    /// The minimal coset representative `y` with `y·λ = x·λ`.
    pub fn min_coset_rep_of(&self, x: WeylElt, lambda: &Coweight) -> Result<WeylElt> {
        let reps = self.min_coset_reps(lambda)?;
        let p = self.act(x, lambda);
        Ok(*reps
            .iter()
            .find(|&&r| self.act(r, lambda) == p)
            .expect("orbit point always has a representative"))
    }

    /// Renders a word in 1-based generator indices ("e" for the identity).
    pub fn word_to_string(&self, letters: &[u8]) -> String {
        word_string(letters, self.rank())
    }

    /// Canonical display form of an element (its ShortLex word).
    pub fn elt_string(&self, w: WeylElt) -> String {
        self.word_to_string(self.word(w))
    }

    /// Parses a word like "121", "1,2,1" or "e" into letters (0-based).
    pub fn parse_word(&self, s: &str) -> Result<Vec<u8>> {
        parse_word(s, self.rank())
    }
}

/// Renders 0-based letters as a 1-based word string.
pub fn word_string(letters: &[u8], rank: usize) -> String {
    if letters.is_empty() {
        return "e".to_string();
    }
    let parts: Vec<String> = letters
        .iter()
        .map(|&l| (l as usize + 1).to_string())
        .collect();
    if rank <= 9 {
        parts.concat()
    } else {
        parts.join(",")
    }
}

/// Parses a 1-based word string into 0-based letters.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<u8>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let bad = |tok: &str| Error::Config {
        field: "word".into(),
        message: format!("`{tok}` is not a generator index in 1..={rank}"),
    };
    let toks: Vec<String> = if s.contains(',') {
        s.split(',').map(|t| t.trim().to_string()).collect()
    } else {
        s.chars().map(|c| c.to_string()).collect()
    };
    let mut out = Vec::with_capacity(toks.len());
    for t in &toks {
        let v: usize = t.parse().map_err(|_| bad(t))?;
        if v == 0 || v > rank {
            return Err(bad(t));
        }
        out.push((v - 1) as u8);
    }
    Ok(out)
}
