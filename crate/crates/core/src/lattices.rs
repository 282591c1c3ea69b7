//! Even integral lattices given by Gram matrices: standard building blocks,
//! invariants (signature, Smith form, discriminant form data), the search
//! for primitive vectors realizing the rank two lattices `T_n`, and the
//! exhaustive check on `J`-invariant rank four forms.
//!
//! The preset `A1` is `[2]` and `E7` is minus its Cartan matrix. Inside
//! the Picard lattice `N` all root lattices are negative definite.

use std::fmt;

use k3_algebra::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::report::VerificationReport;

/// A symmetric integer Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    pub name: String,
    pub gram: Vec<Vec<i64>>,
}

impl GramLattice {
    pub fn new(name: impl Into<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(CoreError::InvalidInput("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(CoreError::InvalidInput(format!("Gram matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(GramLattice { name: name.into(), gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
    }

    /// The hyperbolic plane `[[0, 1], [1, 0]]`.
    pub fn u() -> Self {
        GramLattice { name: "U".into(), gram: vec![vec![0, 1], vec![1, 0]] }
    }

    pub fn a1() -> Self {
        GramLattice { name: "A1".into(), gram: vec![vec![2]] }
    }

    /// Minus the Cartan matrix of `E7`: a chain of six nodes with a seventh
    /// attached to the third.
    pub fn e7() -> Self {
        let mut g = vec![vec![0i64; 7]; 7];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = -2;
        }
        let mut edge = |a: usize, b: usize| {
            g[a][b] = 1;
            g[b][a] = 1;
        };
        for i in 0..5 {
            edge(i, i + 1);
        }
        edge(2, 6);
        GramLattice { name: "E7".into(), gram: g }
    }

    /// `L(n)`: the Gram matrix scaled by `n`.
    pub fn twist(&self, n: i64) -> Self {
        GramLattice {
            name: format!("{}({n})", self.name),
            gram: self.gram.iter().map(|r| r.iter().map(|x| x * n).collect()).collect(),
        }
    }

    pub fn direct_sum(parts: &[GramLattice]) -> Self {
        let n: usize = parts.iter().map(|p| p.rank()).sum();
        let mut g = vec![vec![0i64; n]; n];
        let mut off = 0;
        for p in parts {
            for (i, row) in p.gram.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    g[off + i][off + j] = *x;
                }
            }
            off += p.rank();
        }
        let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("+");
        GramLattice { name, gram: g }
    }

    pub fn diagonal(name: impl Into<String>, d: &[i64]) -> Self {
        let n = d.len();
        let mut g = vec![vec![0i64; n]; n];
        for (i, x) in d.iter().enumerate() {
            g[i][i] = *x;
        }
        GramLattice { name: name.into(), gram: g }
    }

    /// `U ⊕ E7 ⊕ E7 ⊕ A1 ⊕ A1` with every root lattice negative definite,
    /// so the `A1` summands are `[-2]`.
    pub fn picard_generic() -> Self {
        let a = Self::a1().twist(-1);
        let mut l = Self::direct_sum(&[Self::u(), Self::e7(), Self::e7(), a.clone(), a]);
        l.name = "N".into();
        l
    }

    /// `A1 ⊕ A1 ⊕ A1(-1) ⊕ A1(-1)`.
    pub fn transcendental_generic() -> Self {
        let m = Self::a1().twist(-1);
        let mut l = Self::direct_sum(&[Self::a1(), Self::a1(), m.clone(), m]);
        l.name = "T".into();
        l
    }

    /// Parses `N`, `T`, or a `+`-separated list of `U`, `A1`, `E7`, each
    /// optionally twisted as `A1(-1)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "N" => return Ok(Self::picard_generic()),
            "T" => return Ok(Self::transcendental_generic()),
            _ => {}
        }
        let mut parts = Vec::new();
        for tok in s.split('+') {
            let tok = tok.trim();
            let (base, tw) = match tok.find('(') {
                Some(k) if tok.ends_with(')') => {
                    let n: i64 = tok[k + 1..tok.len() - 1]
                        .trim()
                        .parse()
                        .map_err(|_| CoreError::InvalidInput(format!("bad twist in {tok}")))?;
                    (&tok[..k], Some(n))
                }
                _ => (tok, None),
            };
            let l = match base {
                "U" => Self::u(),
                "A1" => Self::a1(),
                "E7" => Self::e7(),
                _ => return Err(CoreError::InvalidInput(format!("unknown lattice {base}"))),
            };
            parts.push(match tw {
                Some(n) => l.twist(n),
                None => l,
            });
        }
        Ok(Self::direct_sum(&parts))
    }

    fn big(&self) -> Vec<Vec<BigInt>> {
        self.gram.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }
}

impl fmt::Display for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .gram
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// `(s₊, s₋, s₀)` by congruent diagonalization over `Q`.
pub fn signature(g: &GramLattice) -> (usize, usize, usize) {
    let n = g.rank();
    let mut a: Vec<Vec<Rational>> =
        g.gram.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        // Choose a pivot with a nonzero diagonal entry, creating one if needed.
        let p = match alive.iter().copied().find(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let pair = alive
                    .iter()
                    .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                match pair {
                    None => {
                        zero += alive.len();
                        break;
                    }
                    Some((i, j)) => {
                        // e_i ← e_i + e_j gives a_ii = 2a_ij.
                        for k in 0..n {
                            let v = a[j][k].clone();
                            a[i][k] += v;
                        }
                        for k in 0..n {
                            let v = a[k][j].clone();
                            a[k][i] += v;
                        }
                        i
                    }
                }
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        alive.retain(|&i| i != p);
        for &i in &alive {
            let f = a[i][p].clone() / d.clone();
            if f.is_zero() {
                continue;
            }
            for k in 0..n {
                let v = f.clone() * a[p][k].clone();
                a[i][k] -= v;
            }
            for k in 0..n {
                let v = f.clone() * a[k][p].clone();
                a[k][i] -= v;
            }
        }
    }
    (pos, neg, zero)
}

/// Smith normal form `UGV = D` returning the diagonal and `V`.
pub fn smith_normal_form(m: &[Vec<BigInt>]) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
    let n = m.len();
    let mut a = m.to_vec();
    let mut v: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let col_op = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            let t = &row[src] * f;
            row[dst] -= t;
        }
    };
    let swap_cols = |a: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            row.swap(i, j);
        }
    };
    for t in 0..n {
        // Bring the smallest nonzero entry of the remaining block to (t, t).
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return (finish_diag(&a, n), v);
            };
            a.swap(t, bi);
            swap_cols(&mut a, &mut v, t, bj);
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    let row_t = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(row_t) {
                        *x -= &q * y;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    col_op(&mut a, &mut v, j, t, &q);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold a row with a non-multiple into row t.
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let row_i = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row_i) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
    }
    (finish_diag(&a, n), v)
}

fn finish_diag(a: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    (0..n).map(|i| a[i][i].abs()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeInvariants {
    pub rank: usize,
    pub signature: (usize, usize),
    pub determinant: BigInt,
    pub invariant_factors: Vec<BigInt>,
    /// Number of invariant factors different from 1.
    pub ell: usize,
    pub two_elementary: bool,
    /// For 2-elementary lattices: 0 when the discriminant quadratic form
    /// takes only integral values, else 1.
    pub delta: Option<u8>,
}

impl LatticeInvariants {
    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "signature": [self.signature.0, self.signature.1],
            "determinant": self.determinant.to_string(),
            "invariant_factors": self.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "ell": self.ell,
            "two_elementary": self.two_elementary,
            "delta": self.delta,
        })
    }
}

pub fn lattice_invariants(l: &GramLattice) -> Result<LatticeInvariants> {
    let g = l.big();
    let det = determinant(&g);
    if det.is_zero() {
        return Err(CoreError::Singular(format!("{} is degenerate", l.name)));
    }
    let (p, q, _) = signature(l);
    let (diag, v) = smith_normal_form(&g);
    let nontrivial: Vec<usize> = (0..diag.len()).filter(|&i| !diag[i].is_one()).collect();
    let two = BigInt::from(2);
    let two_elementary = nontrivial.iter().all(|&i| diag[i] == two);
    let delta = if two_elementary {
        // Generators of L*/L are V e_i / d_i; q(x) = xᵀGx.
        let mut integral = true;
        for &i in &nontrivial {
            let col: Vec<Rational> = (0..g.len())
                .map(|r| Rational::new(v[r][i].clone(), diag[i].clone()))
                .collect();
            let gx = mat_vec(&g, &col);
            let qv: Rational = col.iter().zip(&gx).map(|(a, b)| a.clone() * b.clone()).sum();
            integral &= qv.is_integer();
        }
        Some(if integral { 0 } else { 1 })
    } else {
        None
    };
    let mut factors: Vec<BigInt> = diag;
    factors.sort();
    Ok(LatticeInvariants {
        rank: l.rank(),
        signature: (p, q),
        determinant: det,
        ell: nontrivial.len(),
        invariant_factors: factors,
        two_elementary,
        delta,
    })
}

fn mat_vec(g: &[Vec<BigInt>], x: &[Rational]) -> Vec<Rational> {
    g.iter()
        .map(|r| r.iter().zip(x).map(|(a, b)| Rational::from_integer(a.clone()) * b.clone()).sum())
        .collect()
}

/// A vector `a ∈ Z⁴` with `n = a₁² + a₂² - a₃² - a₄²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealizationVector {
    pub a: [i64; 4],
}

impl RealizationVector {
    pub fn n(&self) -> i64 {
        let [a1, a2, a3, a4] = self.a;
        a1 * a1 + a2 * a2 - a3 * a3 - a4 * a4
    }

    /// `J a` for `J = A ⊕ A`, `A = [[0, -1], [1, 0]]`.
    pub fn j_image(&self) -> [i64; 4] {
        let [a1, a2, a3, a4] = self.a;
        [-a2, a1, -a4, a3]
    }

    /// gcd of the 2×2 minors of the rows `a` and `(a₂, -a₁, -a₄, a₃)`.
    pub fn minor_gcd(&self) -> i64 {
        let [a1, a2, a3, a4] = self.a;
        minors_gcd(self.a, [a2, -a1, -a4, a3])
    }

    /// gcd of the 2×2 minors of `a` and `Ja`: 1 iff `⟨a, Ja⟩` is primitive.
    pub fn span_minor_gcd(&self) -> i64 {
        minors_gcd(self.a, self.j_image())
    }
}

fn minors_gcd(r: [i64; 4], s: [i64; 4]) -> i64 {
    let mut g = 0i64;
    for i in 0..4 {
        for j in i + 1..4 {
            g = g.gcd(&(r[i] * s[j] - r[j] * s[i]));
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TnResult {
    Realized { vector: RealizationVector, method: String },
    Obstructed { transcript: Vec<String> },
}

impl TnResult {
    pub fn to_json(&self, n: i64) -> Value {
        match self {
            TnResult::Realized { vector, method } => json!({
                "n": n,
                "status": "realized",
                "vector": vector.a,
                "method": method,
                "minor_gcd": vector.minor_gcd(),
                "span_minor_gcd": vector.span_minor_gcd(),
                "gram": tn_gram(vector).gram,
            }),
            TnResult::Obstructed { transcript } => json!({
                "n": n,
                "status": "obstructed",
                "transcript": transcript,
            }),
        }
    }
}

fn valid(v: &RealizationVector, n: i64) -> bool {
    v.n() == n && v.minor_gcd() == 1 && v.span_minor_gcd() == 1
}

/// Finds a primitive `a` with form value `n` for `n ≢ 2 (mod 4)`, or
/// returns the parity argument excluding `n ≡ 2 (mod 4)`.
pub fn tn_search(n: i64) -> Result<TnResult> {
    if n < 1 {
        return Err(CoreError::InvalidInput("n must be positive".into()));
    }
    if n % 4 == 2 {
        return Ok(TnResult::Obstructed { transcript: residue_transcript(n) });
    }
    let candidate = if n % 2 == 1 {
        let k = (n - 1) / 2;
        (RealizationVector { a: [k + 1, 0, k, 0] }, format!("odd n = 2k+1 with k = {k}: (k+1, 0, k, 0)"))
    } else {
        let k = n / 2 - 1;
        (RealizationVector { a: [k + 1, 1, k, 0] }, format!("n = 2(k+1) with odd k = {k}: (k+1, 1, k, 0)"))
    };
    if valid(&candidate.0, n) {
        return Ok(TnResult::Realized { vector: candidate.0, method: candidate.1 });
    }
    let bound = 12;
    for v in box_vectors(bound) {
        if valid(&v, n) {
            return Ok(TnResult::Realized { vector: v, method: format!("search with |a_i| <= {bound}") });
        }
    }
    Err(CoreError::Undecidable(format!("no realization of {n} found with |a_i| <= {bound}")))
}

fn box_vectors(bound: i64) -> impl Iterator<Item = RealizationVector> {
    let r = move || -bound..=bound;
    r().flat_map(move |a1| {
        r().flat_map(move |a2| r().flat_map(move |a3| r().map(move |a4| RealizationVector { a: [a1, a2, a3, a4] })))
    })
}

/// The parity argument: if `n ≡ 2 (mod 4)` then `a₁ ≡ a₂` and `a₃ ≡ a₄`
/// (mod 2), so both rows agree mod 2 and every minor is even.
pub fn residue_transcript(n: i64) -> Vec<String> {
    let mut t = vec![format!("n = {n} = 2 mod 4; squares are 0 or 1 mod 4 according to parity")];
    for mask in 0..16u32 {
        let p: Vec<i64> = (0..4).map(|i| ((mask >> i) & 1) as i64).collect();
        let val = (p[0] + p[1] - p[2] - p[3]).rem_euclid(4);
        if val != 2 {
            continue;
        }
        let r1 = [p[0], p[1], p[2], p[3]];
        let r2 = [p[1], p[0], p[3], p[2]];
        let same = r1 == r2;
        t.push(format!(
            "(a1^2, a2^2, a3^2, a4^2) = ({}, {}, {}, {}) mod 4: rows agree mod 2 = {same}, so all 2x2 minors are even",
            p[0], p[1], p[2], p[3]
        ));
    }
    t.push("no residue class admits a primitive pair; T_n is not realized".into());
    t
}

/// For each `n ≤ max_n` with `n ≡ 2 (mod 4)`, the number of vectors with
/// `|aᵢ| ≤ bound` and form value `n`, and of those that are primitive.
pub fn obstruction_evidence(max_n: i64, bound: i64) -> Vec<(i64, usize, usize)> {
    let targets: Vec<i64> = (1..=max_n).filter(|n| n % 4 == 2).collect();
    let mut counts = vec![(0usize, 0usize); targets.len()];
    for v in box_vectors(bound) {
        let n = v.n();
        if n > 0 && n <= max_n && n % 4 == 2 {
            let k = ((n - 2) / 4) as usize;
            counts[k].0 += 1;
            if v.minor_gcd() == 1 || v.span_minor_gcd() == 1 {
                counts[k].1 += 1;
            }
        }
    }
    targets.into_iter().zip(counts).map(|(n, (a, b))| (n, a, b)).collect()
}

/// Gram matrix of `⟨a, Ja⟩` under `diag(2, 2, -2, -2)`.
pub fn tn_gram(v: &RealizationVector) -> GramLattice {
    let form = |x: [i64; 4], y: [i64; 4]| 2 * (x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3]);
    let (a, b) = (v.a, v.j_image());
    GramLattice {
        name: format!("T_{}", v.n()),
        gram: vec![vec![form(a, a), form(a, b)], vec![form(b, a), form(b, b)]],
    }
}

/// The transcendental lattice `diag(4m, 4m)` of `Km(E × E')` for an
/// isogeny of degree `m`.
pub fn kummer_tn(m: i64) -> Result<GramLattice> {
    if m < 1 {
        return Err(CoreError::InvalidInput("m must be positive".into()));
    }
    Ok(GramLattice::diagonal(format!("T_{}", 2 * m), &[4 * m, 4 * m]))
}

/// `[[2n,0,b,c],[0,2n,-c,b],[b,-c,2m,0],[c,b,0,2m]]`.
pub fn block_form(n: i64, m: i64, b: i64, c: i64) -> GramLattice {
    GramLattice {
        name: format!("B({n},{m},{b},{c})"),
        gram: vec![
            vec![2 * n, 0, b, c],
            vec![0, 2 * n, -c, b],
            vec![b, -c, 2 * m, 0],
            vec![c, b, 0, 2 * m],
        ],
    }
}

fn j_matrix() -> [[i64; 4]; 4] {
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
}

/// True when `JᵀBJ = B`.
pub fn is_j_invariant(l: &GramLattice) -> bool {
    let j = j_matrix();
    let b = &l.gram;
    (0..4).all(|r| {
        (0..4).all(|s| {
            let v: i64 = (0..4).flat_map(|p| (0..4).map(move |q| (p, q))).map(|(p, q)| j[p][r] * b[p][q] * j[q][s]).sum();
            v == b[r][s]
        })
    })
}

#[derive(Clone, Debug)]
pub struct Rank4Solution {
    pub params: (i64, i64, i64, i64),
    pub two_elementary: bool,
    pub delta: Option<u8>,
}

#[derive(Clone, Debug)]
pub struct Rank4Report {
    pub bound: i64,
    pub solutions: Vec<Rank4Solution>,
    /// The claimed set `{b = c = 0, nm = -1}`.
    pub expected: Vec<(i64, i64, i64, i64)>,
    pub report: VerificationReport,
}

impl Rank4Report {
    pub fn to_json(&self) -> Value {
        json!({
            "bound": self.bound,
            "count": self.solutions.len(),
            "solutions": self.solutions.iter().map(|s| json!({
                "n": s.params.0, "m": s.params.1, "b": s.params.2, "c": s.params.3,
                "two_elementary": s.two_elementary, "delta": s.delta,
            })).collect::<Vec<_>>(),
            "expected": self.expected,
            "report": self.report.to_json(),
        })
    }
}

/// Enumerates `(n, m, b, c)` with entries bounded by `bound` for which the
/// block form has `|det| = 16`, signature `(2, 2)` and is `J`-invariant,
/// and compares the set with `{b = c = 0, nm = -1}`.
pub fn rank4_classification_check(bound: i64) -> Result<Rank4Report> {
    let r = || -bound..=bound;
    let mut solutions = Vec::new();
    for n in r() {
        for m in r() {
            for b in r() {
                for c in r() {
                    let l = block_form(n, m, b, c);
                    let det = determinant(&l.big());
                    if det.abs() != BigInt::from(16) || signature(&l) != (2, 2, 0) || !is_j_invariant(&l) {
                        continue;
                    }
                    let inv = lattice_invariants(&l)?;
                    solutions.push(Rank4Solution { params: (n, m, b, c), two_elementary: inv.two_elementary, delta: inv.delta });
                }
            }
        }
    }
    let expected = vec![(-1, 1, 0, 0), (1, -1, 0, 0)];
    let found: Vec<_> = solutions.iter().map(|s| s.params).collect();
    let extra: Vec<_> = found.iter().filter(|p| !expected.contains(p)).collect();
    let two_el = solutions.iter().filter(|s| s.two_elementary).count();
    let report = VerificationReport::check("rank four forms with |det| = 16, signature (2, 2), J-invariant", found == expected, || {
        format!(
            "{} solutions within |n|,|m|,|b|,|c| <= {bound}, {} outside b = c = 0, nm = -1; first: {:?}",
            found.len(),
            extra.len(),
            extra.first()
        )
    })
    .with_note(format!("{two_el} of {} solutions are 2-elementary", solutions.len()));
    Ok(Rank4Report { bound, solutions, expected, report })
}

/// `|det|` of the block form at `b = c = 0` is `16(nm)²`.
pub fn block_determinant_identity(bound: i64) -> bool {
    (-bound..=bound).all(|n| {
        (-bound..=bound).all(|m| determinant(&block_form(n, m, 0, 0).big()) == BigInt::from(16 * (n * m) * (n * m)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        assert_eq!(GramLattice::a1().twist(-1).gram, vec![vec![-2]]);
        assert_eq!(GramLattice::picard_generic().rank(), 18);
        assert_eq!(GramLattice::transcendental_generic(), {
            let mut d = GramLattice::diagonal("T", &[2, 2, -2, -2]);
            d.name = "T".into();
            d
        });
        assert_eq!(GramLattice::parse("U+E7+E7+A1(-1)+A1(-1)").unwrap().gram, GramLattice::picard_generic().gram);
    }

    #[test]
    fn e7_is_negative_definite_with_det_minus_two() {
        let inv = lattice_invariants(&GramLattice::e7()).unwrap();
        assert_eq!(inv.signature, (0, 7));
        assert_eq!(inv.determinant, BigInt::from(-2));
        assert_eq!(inv.ell, 1);
    }

    #[test]
    fn picard_invariants() {
        let inv = lattice_invariants(&GramLattice::picard_generic()).unwrap();
        assert_eq!((inv.rank, inv.signature, inv.ell, inv.delta), (18, (1, 17), 4, Some(1)));
        assert_eq!(inv.determinant.abs(), BigInt::from(16));
        assert!(inv.two_elementary);
        let t = lattice_invariants(&GramLattice::transcendental_generic()).unwrap();
        assert_eq!((t.signature, t.ell, t.two_elementary), ((2, 2), 4, true));
        let u = lattice_invariants(&GramLattice::u()).unwrap();
        assert_eq!((u.signature, u.determinant.clone(), u.ell), ((1, 1), BigInt::from(-1), 0));
    }

    #[test]
    fn delta_distinguishes_u2_from_a1_sum() {
        let u2 = GramLattice::direct_sum(&[GramLattice::u().twist(2), GramLattice::u().twist(2)]);
        assert_eq!(lattice_invariants(&u2).unwrap().delta, Some(0));
        assert_eq!(lattice_invariants(&GramLattice::transcendental_generic()).unwrap().delta, Some(1));
    }

    #[test]
    fn tn_instances() {
        for n in [1, 3, 4, 7] {
            match tn_search(n).unwrap() {
                TnResult::Realized { vector, .. } => {
                    assert_eq!(tn_gram(&vector).gram, vec![vec![2 * n, 0], vec![0, 2 * n]]);
                    assert_eq!(vector.minor_gcd(), 1);
                }
                other => panic!("{other:?}"),
            }
        }
        assert!(matches!(tn_search(2).unwrap(), TnResult::Obstructed { .. }));
        assert_eq!(kummer_tn(2).unwrap().gram, vec![vec![8, 0], vec![0, 8]]);
    }

    #[test]
    fn block_determinant() {
        assert!(block_determinant_identity(4));
        let l = block_form(1, 1, 0, 0);
        assert_ne!(signature(&l), (2, 2, 0));
    }
}
