#![allow(dead_code)]

use domchrom::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with every pair decided by one draw, in lexicographic order.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_isolate_free(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if !g.has_isolated_vertex() {
            return g;
        }
    }
}

/// χ_dom by a different route than the library solver: every non-isolated
/// vertex must be covered by independent sets, each inside some open
/// neighborhood; a cover can be trimmed into a partition, so the minimum
/// cover size is the answer. Dynamic programming over covered masks.
pub fn cover_oracle(g: &Graph) -> usize {
    let n = g.vertex_count();
    let isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let live: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let m = live.len();
    assert!(
        m <= 24,
        "cover oracle is limited to 24 non-isolated vertices"
    );
    if m == 0 {
        return isolated.len();
    }
    let pos = |v: usize| live.iter().position(|&x| x == v).unwrap();
    // maximal independent subsets of each neighborhood, as masks over `live`
    let mut blocks: Vec<u32> = Vec::new();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        assert!(
            nb.len() <= 20,
            "neighborhood too large for the cover oracle"
        );
        let independent = |sel: u32| {
            let chosen: Vec<usize> = (0..nb.len())
                .filter(|&i| sel >> i & 1 == 1)
                .map(|i| nb[i])
                .collect();
            chosen
                .iter()
                .all(|&a| chosen.iter().all(|&b| a == b || !g.has_edge(a, b)))
        };
        let mut maximal = Vec::new();
        for sel in 0u32..1 << nb.len() {
            if !independent(sel) {
                continue;
            }
            let grows = (0..nb.len()).any(|i| sel >> i & 1 == 0 && independent(sel | 1 << i));
            if !grows {
                maximal.push(sel);
            }
        }
        for sel in maximal {
            let mask = (0..nb.len())
                .filter(|&i| sel >> i & 1 == 1)
                .fold(0u32, |acc, i| acc | 1 << pos(nb[i]));
            blocks.push(mask);
        }
    }
    blocks.sort_unstable();
    blocks.dedup();
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let mut dp = vec![u8::MAX; 1 << m];
    dp[0] = 0;
    for mask in 0..full {
        let d = dp[mask as usize];
        if d == u8::MAX {
            continue;
        }
        let u = (!mask).trailing_zeros();
        for &b in blocks.iter().filter(|&&b| b >> u & 1 == 1) {
            let next = (mask | b) as usize;
            if dp[next] > d + 1 {
                dp[next] = d + 1;
            }
        }
    }
    dp[full as usize] as usize + isolated.len()
}

/// Brute-force dom-stability via the partition oracle (small graphs only).
pub fn naive_stability(g: &Graph) -> usize {
    let n = g.vertex_count();
    let before = domchrom::dom_chromatic_oracle(g, 10).unwrap();
    (1..=n)
        .find(|&s| {
            subsets(n, s).iter().any(|rm| {
                let (h, _) = g.delete_vertices(rm).unwrap();
                domchrom::dom_chromatic_oracle(&h, 10).unwrap() != before
            })
        })
        .unwrap()
}

/// Brute-force dom-bondage via the partition oracle; `None` when no set works.
pub fn naive_bondage(g: &Graph) -> Option<usize> {
    let edges = g.edges();
    let before = domchrom::dom_chromatic_oracle(g, 10).unwrap();
    (1..=edges.len()).find(|&s| {
        subsets(edges.len(), s).iter().any(|idx| {
            let rm: Vec<_> = idx.iter().map(|&i| edges[i]).collect();
            domchrom::dom_chromatic_oracle(&g.delete_edges(&rm).unwrap(), 10).unwrap() != before
        })
    })
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}
