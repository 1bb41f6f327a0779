//! The standard k-graph of level `l`.
//!
//! Vertices are the points of `Z^k`; a path is a triple `(v, w, p)` with
//! `v ≥ w` and `p ∈ {1..l}^{|v-w|}`. Every set of paths handed out here is
//! finite and enumerated in a fixed order: lexicographic on level vectors
//! with `lv_1` varying fastest.

mod lattice;
mod path;

pub use lattice::Point;
pub use path::{Levels, Path};

pub(crate) use path::norm_as_len;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GraphConfig {
    k: usize,
    level: u32,
}

impl GraphConfig {
    pub fn new(k: usize, level: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Config("rank k must be at least 1".into()));
        }
        if level == 0 {
            return Err(Error::Config("level must be at least 1".into()));
        }
        Ok(GraphConfig { k, level })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn check_point(&self, p: &Point) -> Result<()> {
        if p.dim() != self.k {
            return Err(Error::Dimension {
                expected: self.k,
                found: p.dim(),
            });
        }
        Ok(())
    }

    pub fn check_path(&self, path: &Path) -> Result<()> {
        self.check_point(path.range())?;
        path.check_levels(self.level)
    }

    /// `vΛ^n` in enumeration order; `l^{|n|}` paths.
    pub fn enumerate_paths(&self, v: &Point, n: &Point) -> Result<Vec<Path>> {
        self.check_point(v)?;
        self.check_point(n)?;
        if !n.is_nonneg() {
            return Err(Error::Shape(format!("degree {n} has a negative entry")));
        }
        let len = norm_as_len(n).ok_or_else(|| Error::Shape("degree too large".into()))?;
        let source = v.sub(n);
        Ok(level_vectors(len, self.level)
            .map(|lv| Path::new(v.clone(), source.clone(), lv).expect("shape is consistent"))
            .collect())
    }

    /// `λ^{v,n} = (v, v-n, (1,...,1))`.
    pub fn all_ones_path(&self, v: &Point, n: &Point) -> Result<Path> {
        self.check_point(v)?;
        self.check_point(n)?;
        let len = norm_as_len(n)
            .filter(|_| n.is_nonneg())
            .ok_or_else(|| Error::Shape(format!("{n} is not a degree")))?;
        Path::new(v.clone(), v.sub(n), Levels::all_ones(len))
    }

    /// `S(v, w, m, n, p, q)`: pairs `(α, β) ∈ vΛ^m × wΛ^n` whose level vectors
    /// are `p × r` and `q × r` for a shared `r`.
    pub fn s_set(
        &self,
        v: &Point,
        w: &Point,
        m: &Point,
        n: &Point,
        p: &Levels,
        q: &Levels,
    ) -> Result<Vec<(Path, Path)>> {
        for x in [w, m, n] {
            v.check_dim(x)?;
        }
        self.check_point(v)?;
        if !m.is_nonneg() || !n.is_nonneg() {
            return Err(Error::Shape("m and n must be degrees".into()));
        }
        let (Some(dm), Some(dn)) = (norm_as_len(m), norm_as_len(n)) else {
            return Err(Error::Shape("degree too large".into()));
        };
        if p.len() > dm || q.len() > dn || dm - p.len() != dn - q.len() {
            return Err(Error::Shape(format!(
                "need |m|-|p| = |n|-|q| >= 0, got |m|={dm} |p|={} |n|={dn} |q|={}",
                p.len(),
                q.len()
            )));
        }
        let alpha_source = v.sub(m);
        let beta_source = w.sub(n);
        Ok(level_vectors(dm - p.len(), self.level)
            .map(|r| {
                let alpha = Path::new(v.clone(), alpha_source.clone(), p.concat(&r))
                    .expect("shape is consistent");
                let beta = Path::new(w.clone(), beta_source.clone(), q.concat(&r))
                    .expect("shape is consistent");
                (alpha, beta)
            })
            .collect())
    }

    /// `S(λ, μ) = {(α, β) | λ∘α = μ∘β, d(λ∘α) = d(λ) ∨ d(μ)}` computed via the
    /// S-set closed form.
    pub fn s_of(&self, lambda: &Path, mu: &Path) -> Result<Vec<(Path, Path)>> {
        lambda.range().check_dim(mu.range())?;
        if lambda.range() != mu.range() {
            return Err(Error::RangeMismatch(
                lambda.range().to_string(),
                mu.range().to_string(),
            ));
        }
        if !levelvec_compatible(lambda.levels(), mu.levels()) {
            return Ok(Vec::new());
        }
        let (dl, dm) = (lambda.degree(), mu.degree());
        let (nl, nm) = (lambda.degree_norm(), mu.degree_norm());
        let p = mu.levels().low_part(nm.saturating_sub(nl));
        let q = lambda.levels().low_part(nl.saturating_sub(nm));
        self.s_set(
            lambda.source(),
            mu.source(),
            &dm.truncated_sub(&dl),
            &dl.truncated_sub(&dm),
            &p,
            &q,
        )
    }
}

pub fn levelvec_compatible(p: &Levels, q: &Levels) -> bool {
    p.compatible(q)
}

/// All of `{1..level}^len`, `lv_1` varying fastest.
pub fn level_vectors(len: usize, level: u32) -> impl Iterator<Item = Levels> {
    let mut current = Some(vec![1u32; len]);
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = current.as_mut().unwrap();
        let mut i = 0;
        loop {
            if i == len {
                current = None;
                break;
            }
            if next[i] < level {
                next[i] += 1;
                break;
            }
            next[i] = 1;
            i += 1;
        }
        Some(Levels::from_low_first(out))
    })
}

/// All `t ∈ N^k` with `|t| = total`, lexicographically increasing.
pub fn compositions(k: usize, total: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, total: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(k - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(k, total, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All nonzero degrees with `|n| <= bound` in rank `k`, by norm then lexicographically.
pub fn degrees_up_to(k: usize, bound: usize) -> Vec<Point> {
    (1..=bound)
        .flat_map(|t| compositions(k, t))
        .map(|c| Point::from_i64s(&c.iter().map(|&x| x as i64).collect::<Vec<_>>()))
        .collect()
}
