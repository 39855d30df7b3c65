//! Finite Weyl groups of types A, B, D, G2 and F4: enumeration, normal forms,
//! multiplication tables and Bruhat order.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub const DEFAULT_CAP: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("group has more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: &'static str, rank: usize },
    #[error("weight function has {got} values, expected {expected}")]
    WeightArity { got: usize, expected: usize },
    #[error("weights {0:?} are not constant on conjugate generators")]
    WeightNotConjugationInvariant(Vec<u32>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterType {
    /// `A(n)` is the symmetric group on `n + 1` letters.
    A(usize),
    B(usize),
    D(usize),
    G2,
    F4,
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match *self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::G2 => 2,
            CoxeterType::F4 => 4,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            CoxeterType::A(_) => "A",
            CoxeterType::B(_) => "B",
            CoxeterType::D(_) => "D",
            CoxeterType::G2 => "G2",
            CoxeterType::F4 => "F4",
        }
    }

    /// Parses a family name and rank, e.g. `("B", 3)`. Rank is ignored for G2 and F4.
    pub fn parse(family: &str, rank: usize) -> Option<Self> {
        match family.to_ascii_uppercase().as_str() {
            "A" => Some(CoxeterType::A(rank)),
            "B" => Some(CoxeterType::B(rank)),
            "D" => Some(CoxeterType::D(rank)),
            "G2" => Some(CoxeterType::G2),
            "F4" => Some(CoxeterType::F4),
            _ => None,
        }
    }

    pub fn order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => (1u128 << n) * fact(n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
            CoxeterType::G2 => 12,
            CoxeterType::F4 => 1152,
        }
    }

    fn validate(&self) -> Result<(), CoxeterError> {
        let ok = match *self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) | CoxeterType::D(n) => n >= 2,
            CoxeterType::G2 | CoxeterType::F4 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(CoxeterError::InvalidRank { family: self.family(), rank: self.rank() })
        }
    }

    pub fn generator_names(&self) -> Vec<String> {
        match *self {
            CoxeterType::A(n) => (1..=n).map(|i| format!("s{i}")).collect(),
            CoxeterType::B(n) => std::iter::once("t".to_string()).chain((1..n).map(|i| format!("s{i}"))).collect(),
            CoxeterType::D(n) => std::iter::once("u".to_string()).chain((1..n).map(|i| format!("s{i}"))).collect(),
            CoxeterType::G2 => vec!["s".into(), "t".into()],
            CoxeterType::F4 => (1..=4).map(|i| format!("s{i}")).collect(),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::G2 | CoxeterType::F4 => f.write_str(self.family()),
            _ => write!(f, "{}{}", self.family(), self.rank()),
        }
    }
}

/// How generators act on the hashable keys used during enumeration.
enum Realization {
    /// One-line notation of signed permutations of `1..=n`.
    Signed(Vec<Vec<i16>>),
    /// Permutations of a root system, indices into the root list.
    Roots(Vec<Vec<u16>>),
}

impl Realization {
    fn new(ct: CoxeterType) -> Self {
        let swap = |n: usize, i: usize| {
            let mut g: Vec<i16> = (1..=n as i16).collect();
            g.swap(i - 1, i);
            g
        };
        match ct {
            CoxeterType::A(n) => Realization::Signed((1..=n).map(|i| swap(n + 1, i)).collect()),
            CoxeterType::B(n) => {
                let mut t: Vec<i16> = (1..=n as i16).collect();
                t[0] = -1;
                Realization::Signed(std::iter::once(t).chain((1..n).map(|i| swap(n, i))).collect())
            }
            CoxeterType::D(n) => {
                let mut u: Vec<i16> = (1..=n as i16).collect();
                u[0] = -2;
                u[1] = -1;
                Realization::Signed(std::iter::once(u).chain((1..n).map(|i| swap(n, i))).collect())
            }
            CoxeterType::G2 => Realization::roots(&[vec![2, -1], vec![-3, 2]]),
            CoxeterType::F4 => {
                Realization::roots(&[vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]])
            }
        }
    }

    /// Simple reflections `s_i(b) = b - <a_i^v, b> a_i` permuting the orbit of the simple roots.
    fn roots(cartan: &[Vec<i32>]) -> Self {
        let r = cartan.len();
        let reflect = |i: usize, b: &[i32]| {
            let pairing: i32 = (0..r).map(|j| cartan[i][j] * b[j]).sum();
            let mut out = b.to_vec();
            out[i] -= pairing;
            out
        };
        let mut roots: Vec<Vec<i32>> = (0..r).map(|i| (0..r).map(|j| i32::from(i == j)).collect()).collect();
        let mut index: HashMap<Vec<i32>, usize> = roots.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        let mut k = 0;
        while k < roots.len() {
            for i in 0..r {
                let img = reflect(i, &roots[k]);
                if !index.contains_key(&img) {
                    index.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
            k += 1;
        }
        let gens = (0..r).map(|i| roots.iter().map(|b| index[&reflect(i, b)] as u16).collect()).collect();
        Realization::Roots(gens)
    }

    fn identity(&self) -> Vec<i16> {
        match self {
            Realization::Signed(g) => (1..=g[0].len() as i16).collect(),
            Realization::Roots(g) => (0..g[0].len() as i16).collect(),
        }
    }

    fn right(&self, w: &[i16], s: usize) -> Vec<i16> {
        match self {
            Realization::Signed(g) => g[s]
                .iter()
                .map(|&k| {
                    let x = w[k.unsigned_abs() as usize - 1];
                    if k < 0 {
                        -x
                    } else {
                        x
                    }
                })
                .collect(),
            Realization::Roots(g) => g[s].iter().map(|&k| w[k as usize]).collect(),
        }
    }

    fn left(&self, w: &[i16], s: usize) -> Vec<i16> {
        match self {
            Realization::Signed(g) => w
                .iter()
                .map(|&k| {
                    let x = g[s][k.unsigned_abs() as usize - 1];
                    if k < 0 {
                        -x
                    } else {
                        x
                    }
                })
                .collect(),
            Realization::Roots(g) => w.iter().map(|&k| g[s][k as usize] as i16).collect(),
        }
    }
}

/// A fully enumerated finite Coxeter group. Elements are indices into the
/// enumeration, sorted by length and then by normal form; index 0 is the identity.
#[derive(Clone)]
pub struct WeylGroup {
    ctype: CoxeterType,
    names: Vec<String>,
    coxeter_matrix: Vec<Vec<u32>>,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    rmul: Vec<Vec<usize>>,
    lmul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    below: Vec<Vec<u64>>,
}

/// An element together with its normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub index: usize,
    pub normal_form: Vec<usize>,
}

impl WeylGroup {
    pub fn build(ctype: CoxeterType) -> Result<Self, CoxeterError> {
        Self::build_with_cap(ctype, DEFAULT_CAP)
    }

    pub fn build_with_cap(ctype: CoxeterType, cap: usize) -> Result<Self, CoxeterError> {
        ctype.validate()?;
        let real = Realization::new(ctype);
        let rank = ctype.rank();

        // breadth-first enumeration; BFS depth is the length
        let mut keys: Vec<Vec<i16>> = vec![real.identity()];
        let mut index: HashMap<Vec<i16>, usize> = HashMap::from([(keys[0].clone(), 0)]);
        let mut len = vec![0usize];
        let mut rmul: Vec<Vec<usize>> = Vec::new();
        let mut k = 0;
        while k < keys.len() {
            let mut row = Vec::with_capacity(rank);
            for s in 0..rank {
                let img = real.right(&keys[k], s);
                let j = match index.get(&img) {
                    Some(&j) => j,
                    None => {
                        if keys.len() >= cap {
                            return Err(CoxeterError::GroupTooLarge { cap });
                        }
                        let j = keys.len();
                        index.insert(img.clone(), j);
                        keys.push(img);
                        len.push(len[k] + 1);
                        j
                    }
                };
                row.push(j);
            }
            rmul.push(row);
            k += 1;
        }
        let size = keys.len();
        let lmul: Vec<Vec<usize>> = keys.iter().map(|w| (0..rank).map(|s| index[&real.left(w, s)]).collect()).collect();

        // normal forms by peeling the smallest left descent
        let mut nf: Vec<Vec<usize>> = vec![Vec::new(); size];
        for w in 1..size {
            let s = (0..rank).find(|&s| len[lmul[w][s]] < len[w]).expect("nonidentity has a descent");
            let mut word = vec![s];
            word.extend_from_slice(&nf[lmul[w][s]]);
            nf[w] = word;
        }

        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by(|&x, &y| (len[x], &nf[x]).cmp(&(len[y], &nf[y])));
        let mut pos = vec![0; size];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let remap = |table: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            order.iter().map(|&old| table[old].iter().map(|&j| pos[j]).collect()).collect()
        };
        let rmul = remap(&rmul);
        let lmul = remap(&lmul);
        let words: Vec<Vec<usize>> = order.iter().map(|&old| nf[old].clone()).collect();
        let lengths: Vec<usize> = order.iter().map(|&old| len[old]).collect();

        let inverse: Vec<usize> = words.iter().map(|w| w.iter().rev().fold(0, |acc, &s| rmul[acc][s])).collect();

        let coxeter_matrix = (0..rank)
            .map(|s| {
                (0..rank)
                    .map(|t| {
                        let mut x = 0;
                        let mut m = 0;
                        loop {
                            x = rmul[rmul[x][s]][t];
                            m += 1;
                            if x == 0 {
                                break m;
                            }
                        }
                    })
                    .collect()
            })
            .collect();

        let mut g = WeylGroup {
            ctype,
            names: ctype.generator_names(),
            coxeter_matrix,
            words,
            lengths,
            rmul,
            lmul,
            inverse,
            below: Vec::new(),
        };
        g.below = g.compute_bruhat();
        Ok(g)
    }

    /// `{y <= w} = D ∪ sD` where `D = {y <= sw}` for a left descent `s` of `w`.
    fn compute_bruhat(&self) -> Vec<Vec<u64>> {
        let n = self.size();
        let blocks = n.div_ceil(64);
        let mut below: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut id = vec![0u64; blocks];
        id[0] = 1;
        below.push(id);
        for w in 1..n {
            let s = self.words[w][0];
            let sw = self.lmul[w][s];
            let mut set = below[sw].clone();
            for y in iter_bits(&below[sw]) {
                let sy = self.lmul[y][s];
                set[sy / 64] |= 1 << (sy % 64);
            }
            below.push(set);
        }
        below
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Element index of the generator `s`.
    pub fn generator(&self, s: usize) -> usize {
        self.rmul[0][s]
    }

    pub fn longest(&self) -> usize {
        self.size() - 1
    }

    pub fn element(&self, w: usize) -> GroupElement {
        GroupElement { index: w, normal_form: self.words[w].clone() }
    }

    /// Lexicographically smallest reduced word.
    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn lweight(&self, w: usize, l: &WeightFunction) -> u64 {
        self.words[w].iter().map(|&s| u64::from(l.values[s])).sum()
    }

    /// `w * s`.
    pub fn rmul_gen(&self, w: usize, s: usize) -> usize {
        self.rmul[w][s]
    }

    /// `s * w`.
    pub fn lmul_gen(&self, s: usize, w: usize) -> usize {
        self.lmul[w][s]
    }

    pub fn mult(&self, w: usize, x: usize) -> usize {
        self.words[x].iter().fold(w, |acc, &s| self.rmul[acc][s])
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// Element represented by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &s| self.rmul[acc][s])
    }

    pub fn descents_left(&self, w: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.lengths[self.lmul[w][s]] < self.lengths[w]).collect()
    }

    pub fn descents_right(&self, w: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.lengths[self.rmul[w][s]] < self.lengths[w]).collect()
    }

    pub fn bruhat_leq(&self, y: usize, w: usize) -> bool {
        self.below[w][y / 64] >> (y % 64) & 1 == 1
    }

    /// All `y <= w`, in increasing index order.
    pub fn bruhat_below(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.below[w])
    }

    /// Order of the subgroup generated by the given generators.
    pub fn parabolic_order(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.size()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(w) = stack.pop() {
            for &s in gens {
                let x = self.rmul[w][s];
                if !seen[x] {
                    seen[x] = true;
                    count += 1;
                    stack.push(x);
                }
            }
        }
        count
    }

    /// Renders an element as `t.s1.s2`; the identity is `1`.
    pub fn render(&self, w: usize) -> String {
        if w == 0 {
            return "1".to_string();
        }
        self.words[w].iter().map(|&s| self.names[s].as_str()).collect::<Vec<_>>().join(".")
    }

    /// Parses the output of [`WeylGroup::render`].
    pub fn parse_element(&self, s: &str) -> Option<usize> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Some(0);
        }
        let mut word = Vec::new();
        for tok in s.split('.') {
            word.push(self.names.iter().position(|n| n == tok)?);
        }
        Some(self.from_word(&word))
    }

    /// Generator classes under conjugacy: generators joined by an odd bond are conjugate.
    pub fn generator_classes(&self) -> Vec<usize> {
        let r = self.rank();
        let mut class: Vec<usize> = (0..r).collect();
        fn find(c: &mut Vec<usize>, x: usize) -> usize {
            if c[x] != x {
                let root = find(c, c[x]);
                c[x] = root;
            }
            c[x]
        }
        for s in 0..r {
            for t in 0..r {
                if s != t && self.coxeter_matrix[s][t] % 2 == 1 {
                    let (a, b) = (find(&mut class, s), find(&mut class, t));
                    class[a.max(b)] = a.min(b);
                }
            }
        }
        (0..r).map(|s| find(&mut class, s)).collect()
    }

    pub fn validate_weight(&self, l: &WeightFunction) -> bool {
        if l.values.len() != self.rank() {
            return false;
        }
        let class = self.generator_classes();
        (0..self.rank()).all(|s| l.values[s] == l.values[class[s]])
    }
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylGroup({}, order {})", self.ctype, self.size())
    }
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(b, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                return None;
            }
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b * 64 + i)
        })
    })
}

/// Weight function `L`, one natural number per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightFunction {
    pub values: Vec<u32>,
}

impl WeightFunction {
    pub fn new(values: Vec<u32>) -> Self {
        Self { values }
    }

    pub fn uniform(rank: usize, k: u32) -> Self {
        Self { values: vec![k; rank] }
    }

    /// Weights from the usual two parameters.
    ///
    /// * B: `L(t) = b`, `L(s_i) = a`
    /// * G2: `L(s) = a`, `L(t) = b`
    /// * F4: `L(s1) = L(s2) = a`, `L(s3) = L(s4) = b`
    /// * A, D: `a` everywhere, `b` must be absent or equal to `a`
    pub fn from_params(ct: CoxeterType, params: &[u32]) -> Result<Self, CoxeterError> {
        let (a, b) = match params {
            [a] => (*a, *a),
            [a, b] => (*a, *b),
            _ => return Err(CoxeterError::WeightArity { got: params.len(), expected: 2 }),
        };
        let values = match ct {
            CoxeterType::A(n) | CoxeterType::D(n) => {
                if a != b {
                    return Err(CoxeterError::WeightNotConjugationInvariant(params.to_vec()));
                }
                vec![a; n]
            }
            CoxeterType::B(n) => std::iter::once(b).chain(std::iter::repeat_n(a, n - 1)).collect(),
            CoxeterType::G2 => vec![a, b],
            CoxeterType::F4 => vec![a, a, b, b],
        };
        Ok(Self { values })
    }

    pub fn get(&self, s: usize) -> u32 {
        self.values[s]
    }
}
