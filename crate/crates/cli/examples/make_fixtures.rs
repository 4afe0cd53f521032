//! Regenerates the acceptance fixtures and freezes the oracle values next
//! to them.
//!
//! cargo run --release -p tfvs-cli --example make_fixtures [-- OUT_DIR]
//!
//! Records in a corpus file are separated by blank lines. Each `*_expected`
//! file has one line per record.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tfvs_core::generate::generate;
use tfvs_core::graph::{inconsistent_set, MixedMultigraph};
use tfvs_core::io::{write_mixed, write_tournament, write_undirected};
use tfvs_core::oracle::{
    brute_min_fvc, brute_min_fvc_avoiding, brute_min_fvs, brute_min_fvs_avoiding,
};
use tfvs_core::{Tournament, UndirectedMultigraph};

fn ids(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

struct Corpus {
    records: String,
    expected: String,
}

impl Corpus {
    fn new() -> Self {
        Corpus {
            records: String::new(),
            expected: String::new(),
        }
    }

    fn push(&mut self, record: &str, expected: impl std::fmt::Display) {
        if !self.records.is_empty() {
            self.records.push('\n');
        }
        self.records.push_str(record);
        let _ = writeln!(self.expected, "{expected}");
    }

    fn save(&self, dir: &Path, name: &str) {
        std::fs::write(dir.join(format!("{name}.txt")), &self.records).unwrap();
        std::fs::write(dir.join(format!("{name}_expected.txt")), &self.expected).unwrap();
    }
}

/// 1000 tournaments with n in 8..=14; expected: minimum FVS size.
fn random_tournaments() -> Corpus {
    let mut c = Corpus::new();
    for i in 0..1000u64 {
        let n = 8 + (i % 7) as usize;
        let t = generate(n, 1_000 + i);
        c.push(&write_tournament(&t), brute_min_fvs(&t).unwrap().opt_size);
    }
    c
}

/// Random multigraphs with n <= 60 and maximum degree <= 8; expected: `n m d`.
fn multigraphs(rng: &mut ChaCha8Rng) -> Corpus {
    let mut c = Corpus::new();
    for _ in 0..1000 {
        let n = rng.random_range(2..=60);
        let cap = rng.random_range(1..=8);
        let target = rng.random_range(0..=n * cap / 2);
        let mut degree = vec![0; n];
        let mut edges = Vec::new();
        for _ in 0..4 * target {
            if edges.len() == target {
                break;
            }
            let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
            if u != v && degree[u] < cap && degree[v] < cap {
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v));
            }
        }
        let g = UndirectedMultigraph::new(n, edges).unwrap();
        let line = format!("{} {} {}", n, g.edge_count(), g.max_degree());
        c.push(&write_undirected(&g), line);
    }
    c
}

/// Random tournament with n <= 12 and a random acyclic `M`, with the
/// vertices inconsistent with `M` deleted. Expected: minimum FVS avoiding M.
fn tournaments_with_m(rng: &mut ChaCha8Rng) -> Corpus {
    let mut c = Corpus::new();
    let mut made = 0;
    let mut seed = 50_000u64;
    while made < 500 {
        seed += 1;
        let n = rng.random_range(3..=12);
        let t = generate(n, seed);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let want = rng.random_range(1..=n / 2 + 1);
        let mut m: Vec<usize> = Vec::new();
        for v in order {
            if m.len() == want {
                break;
            }
            m.push(v);
            if !t.is_acyclic_on(&t.vertex_set(&m).unwrap()) {
                m.pop();
            }
        }
        m.sort_unstable();
        let bad = inconsistent_set(&t, &m).unwrap();
        let sub = t.delete(&bad).unwrap();
        let m_local: Vec<usize> = m.iter().map(|&v| sub.local(v).unwrap()).collect();
        let opt = brute_min_fvs_avoiding(&sub.tournament, &m_local)
            .unwrap()
            .map(|r| r.opt_size)
            .expect("T[M] is acyclic, so deleting the rest works");
        let record = format!(
            "{}M: {}\n",
            write_tournament(&sub.tournament),
            ids(&m_local)
        );
        c.push(&record, opt);
        made += 1;
    }
    c
}

/// Random parts with random intra-part arcs (2-cycles allowed). With
/// `full`, there are exactly `t_max` parts of size `d`.
fn random_mixed(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    d_max: usize,
    t_max: usize,
    full: bool,
) -> MixedMultigraph {
    let d = rng.random_range(1..=d_max);
    let t = if full {
        t_max
    } else {
        rng.random_range(1..=t_max)
    };
    let mut parts = Vec::new();
    let mut next = 0;
    for _ in 0..t {
        let size = if full { d } else { rng.random_range(1..=d) };
        let size = size.min(max_vertices - next);
        if size == 0 {
            break;
        }
        parts.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let mut g = MixedMultigraph::new(parts.clone(), d).unwrap();
    for part in &parts {
        for &u in part {
            for &v in part {
                if u != v && rng.random_bool(0.45) {
                    g.add_arc(u, v, rng.random_range(1..=2)).unwrap();
                }
            }
        }
    }
    g
}

/// Mixed instances with at most 12 vertices and a vertex `v` without
/// undirected edges. Expected: minimum cover avoiding v.
fn contraction_instances(rng: &mut ChaCha8Rng) -> Corpus {
    let mut c = Corpus::new();
    while c.expected.lines().count() < 500 {
        let mut g = random_mixed(rng, 12, 4, 5, false);
        let n = g.vertex_count();
        let verts: Vec<usize> = g.vertices().collect();
        let v = verts[rng.random_range(0..n)];
        let edges = rng.random_range(0..=8);
        for _ in 0..edges {
            let (a, b) = (verts[rng.random_range(0..n)], verts[rng.random_range(0..n)]);
            if a != v && b != v && g.part_of(a) != g.part_of(b) {
                g.add_edge(a, b).unwrap();
            }
        }
        let Some(opt) = brute_min_fvc_avoiding(&g, &[v]).unwrap() else {
            continue;
        };
        let record = format!("{}contract {v}\n", write_mixed(&g));
        c.push(&record, opt.opt_size);
    }
    c
}

/// Matching instances with t <= 6, d <= 3, s <= 8. Expected: minimum cover.
fn matching_instances(rng: &mut ChaCha8Rng) -> Corpus {
    let mut c = Corpus::new();
    for i in 0..500 {
        // Every other instance is dense enough to need the recursive split.
        let dense = i % 2 == 1;
        let mut g = random_mixed(rng, 18, 3, 6, dense);
        let verts: Vec<usize> = g.vertices().collect();
        let s_target = if dense { 8 } else { rng.random_range(0..=8) };
        let mut used = BTreeSet::new();
        let mut s = 0;
        for _ in 0..200 {
            if s == s_target {
                break;
            }
            let (a, b) = (
                verts[rng.random_range(0..verts.len())],
                verts[rng.random_range(0..verts.len())],
            );
            if g.part_of(a) != g.part_of(b) && !used.contains(&a) && !used.contains(&b) {
                g.add_edge(a, b).unwrap();
                used.insert(a);
                used.insert(b);
                s += 1;
            }
        }
        let opt = brute_min_fvc(&g).unwrap().opt_size;
        c.push(&write_mixed(&g), opt);
    }
    c
}

/// Tournaments with n <= 20 built from a transitive order plus at most four
/// vertices with random arcs, so the optimum is at most 4. Expected: optimum.
fn planted(rng: &mut ChaCha8Rng) -> Corpus {
    let mut c = Corpus::new();
    while c.expected.lines().count() < 100 {
        let n = rng.random_range(8..=20);
        let h = rng.random_range(1..=4);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let rank: Vec<usize> = {
            let mut r = vec![0; n];
            for (pos, &v) in perm.iter().enumerate() {
                r[v] = pos;
            }
            r
        };
        let planted: BTreeSet<usize> = perm[..h].iter().copied().collect();
        let coin: Vec<bool> = (0..n * n).map(|_| rng.random_bool(0.5)).collect();
        let t = Tournament::from_fn(n, |i, j| {
            if planted.contains(&i) || planted.contains(&j) {
                coin[i * n + j]
            } else {
                rank[i] < rank[j]
            }
        });
        let opt = brute_min_fvs(&t).unwrap().opt_size;
        if opt == 0 {
            continue;
        }
        c.push(&write_tournament(&t), opt);
    }
    c
}

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures"));
    std::fs::create_dir_all(&dir).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_901);
    random_tournaments().save(&dir, "tournaments");
    multigraphs(&mut rng).save(&dir, "multigraphs");
    tournaments_with_m(&mut rng).save(&dir, "reduction");
    contraction_instances(&mut rng).save(&dir, "contraction");
    matching_instances(&mut rng).save(&dir, "matching");
    planted(&mut rng).save(&dir, "planted");
    eprintln!("fixtures written to {}", dir.display());
}
