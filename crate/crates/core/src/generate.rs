//! Seeded random instance generators.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Weight};

fn check_probability(name: &str, p: f64, allow_zero: bool) -> Result<()> {
    let ok = if allow_zero {
        (0.0..=1.0).contains(&p)
    } else {
        p > 0.0 && p <= 1.0
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} = {p} out of range"
        )))
    }
}

/// Erdős–Rényi G(n, p) with unit weights; resampled until at least one edge exists.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} < 2")));
    }
    check_probability("p", p, false)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v, Weight::from_integer(1)));
                }
            }
        }
        if !edges.is_empty() {
            return Graph::new(n, edges, None);
        }
    }
}

/// G(n, p_out) with a planted block on vertices `0..k` whose pairs appear with
/// probability `p_in`.
pub fn planted(n: usize, k: usize, p_in: f64, p_out: f64, seed: u64) -> Result<Graph> {
    if n < 2 || k < 2 || k > n {
        return Err(Error::InvalidParameter(format!(
            "planted block needs 2 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    check_probability("p_in", p_in, false)?;
    check_probability("p_out", p_out, true)?;
    if p_in <= p_out {
        return Err(Error::InvalidParameter("p_in must exceed p_out".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let p = if v < k { p_in } else { p_out };
                if rng.random_bool(p) {
                    edges.push((u, v, Weight::from_integer(1)));
                }
            }
        }
        if !edges.is_empty() {
            return Graph::new(n, edges, None);
        }
    }
}

/// `m` distinct uniformly random unit edges on `n` vertices, for large-scale runs.
pub fn random_edges(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let pairs = (n as u128) * (n as u128 - 1) / 2;
    if n < 2 || m == 0 || (m as u128) > pairs {
        return Err(Error::InvalidParameter(format!(
            "cannot place {m} edges on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keys: Vec<u64> = Vec::with_capacity(m);
    while keys.len() < m {
        while keys.len() < m {
            let u = rng.random_range(0..n as u64);
            let v = rng.random_range(0..n as u64);
            if u != v {
                keys.push(u.min(v) << 32 | u.max(v));
            }
        }
        keys.sort_unstable();
        keys.dedup();
    }
    let edges = keys
        .into_iter()
        .map(|k| {
            (
                (k >> 32) as usize,
                (k & 0xffff_ffff) as usize,
                Weight::from_integer(1),
            )
        })
        .collect();
    Graph::new(n, edges, None)
}

/// Copy of `g` with each weight drawn uniformly from {1/100, 2/100, .., 1000/100}.
pub fn with_random_weights(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = g
        .edges()
        .map(|(u, v, _)| (u, v, Weight::new(rng.random_range(1..=1000), 100)))
        .collect();
    Graph::new(g.n(), edges, g.labels().map(|l| l.to_vec())).expect("weights are positive")
}
