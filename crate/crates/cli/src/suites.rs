//! Verification suites: each suite runs a family of exact checks against
//! closed-form expected values and returns a report.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use aromalab_core::bseries::{
    check_divergence_identity, volume_obstruction, BSeriesCoefficients, PolyVectorField,
};
use aromalab_core::complexes::{
    abel_identity_holds, build_aromatic_bicomplex, build_ce_complex, build_graph_complex,
    character_check, euler_characteristic_series, expected_reduced_h0, CeVariant, GraphVariant,
};
use aromalab_core::linalg::{BasisIndex, LinComb, Solver, SparseRationalMatrix};
use aromalab_core::operad::{div, div0, lie_basis, suboperad_span_dimension};
use aromalab_core::rational::{qi, Q};
use aromalab_core::species::{
    enumerate_aromas, enumerate_rooted_trees, enumerate_unlabelled, print_tree, symmetry_order,
    Aroma, UnlabelledKey, UnlabelledKind,
};

use crate::cache;
use crate::config::Config;
use crate::report::VerificationReport;

pub const SUITES: &[&str] = &[
    "dimensions",
    "kernels",
    "embedding",
    "ce-homology",
    "bicomplex",
    "graph-complex",
    "bseries",
    "characters",
    "identities",
    "all",
];

struct Caps {
    default: usize,
    hard: usize,
}

fn caps_for(suite: &str) -> Caps {
    match suite {
        "dimensions" => Caps { default: 6, hard: 8 },
        "kernels" => Caps { default: 6, hard: 7 },
        "embedding" => Caps { default: 5, hard: 5 },
        "ce-homology" => Caps { default: 4, hard: 5 },
        "bicomplex" => Caps { default: 4, hard: 4 },
        "graph-complex" => Caps { default: 5, hard: 6 },
        "bseries" => Caps { default: 6, hard: 7 },
        "characters" => Caps { default: 4, hard: 5 },
        "identities" => Caps { default: 20, hard: 40 },
        _ => Caps { default: 4, hard: 6 },
    }
}

fn resolve_cap(suite: &str, config: &Config) -> Result<usize> {
    let caps = caps_for(suite);
    match config.max_n {
        None => Ok(caps.default),
        Some(n) if n <= caps.hard => Ok(n),
        Some(n) => bail!(
            "requested cap {n} exceeds the {} suite's hard cap {}; \
             basis sizes grow superexponentially, so larger arities are refused",
            suite,
            caps.hard
        ),
    }
}

pub fn run_suite(name: &str, config: &Config) -> Result<VerificationReport> {
    aromalab_core::par::set_parallel(config.parallel);
    match name {
        "dimensions" => dimensions(config),
        "kernels" => kernels(config),
        "embedding" => embedding(config),
        "ce-homology" => ce_homology(config),
        "bicomplex" => bicomplex(config),
        "graph-complex" => graph_complex(config),
        "bseries" => bseries(config),
        "characters" => characters(config),
        "identities" => identities(config),
        "all" => {
            let mut report = VerificationReport::new("all");
            for suite in SUITES.iter().filter(|&&s| s != "all") {
                report.merge(run_suite(suite, config)?);
            }
            Ok(report)
        }
        other => bail!("unknown suite {other:?}; available: {}", SUITES.join(", ")),
    }
}

fn labels(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

fn count_connected_endofunctions(n: usize) -> usize {
    // brute force over all n^n successor maps, keeping the connected ones
    let mut count = 0usize;
    let total = n.pow(n as u32);
    for code in 0..total {
        let mut succ = vec![0usize; n];
        let mut c = code;
        for s in succ.iter_mut() {
            *s = c % n;
            c /= n;
        }
        // connectivity of the underlying undirected graph
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            stack.push(succ[v]);
            for (u, &s) in succ.iter().enumerate() {
                if s == v && !seen[u] {
                    stack.push(u);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            count += 1;
        }
    }
    count
}

fn dimensions(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("dimensions", config)?;
    let mut report = VerificationReport::new("dimensions");
    let cache_dir = config.cache_dir.as_deref();
    for n in 1..=(cap + 1).min(7) {
        report.check("labelled tree count", &format!("n={n}"), || {
            let trees = cache::get_or_build(cache_dir, "trees", "labelled", n, || {
                Ok(enumerate_rooted_trees(&labels(n))?
                    .iter()
                    .map(print_tree)
                    .collect())
            })?;
            Ok(((n as u64).pow(n as u32 - 1).to_string(), trees.len().to_string()))
        });
    }
    for n in 1..=cap {
        report.check(
            "unlabelled trees times orbit sizes",
            &format!("n={n}"),
            || {
                let mut total = 0u64;
                let mut fact = 1u64;
                for k in 2..=n as u64 {
                    fact *= k;
                }
                for key in enumerate_unlabelled(UnlabelledKind::Tree, n)? {
                    total += fact / symmetry_order(&key)?;
                }
                Ok(((n as u64).pow(n as u32 - 1).to_string(), total.to_string()))
            },
        );
    }
    for n in 1..=cap.min(6) {
        report.check("connected functional graphs", &format!("n={n}"), || {
            let aromas = enumerate_aromas(&labels(n), 1)?;
            Ok((
                count_connected_endofunctions(n).to_string(),
                aromas.len().to_string(),
            ))
        });
    }
    Ok(report)
}

fn divergence_matrix(n: usize, min_cycle: usize) -> Result<SparseRationalMatrix> {
    let trees = enumerate_rooted_trees(&labels(n))?;
    let ambient = BasisIndex::new(enumerate_aromas(&labels(n), min_cycle)?);
    let closure = if min_cycle == 1 { div } else { div0 };
    Ok(SparseRationalMatrix::of_map(&trees, &ambient, closure)?)
}

fn kernels(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("kernels", config)?;
    let mut report = VerificationReport::new("kernels");
    for n in 1..=cap {
        report.check("divergence is injective", &format!("n={n}"), || {
            let rank = divergence_matrix(n, 1)?.rank();
            Ok(((n as u64).pow(n as u32 - 1).to_string(), rank.to_string()))
        });
    }
    for n in 1..=cap {
        report.check(
            "reduced-divergence kernel dimension",
            &format!("n={n}"),
            || {
                let kernel = divergence_matrix(n, 2)?.kernel_basis();
                let factorial: u64 = (1..n as u64).product();
                Ok((factorial.max(1).to_string(), kernel.len().to_string()))
            },
        );
    }
    for n in 1..=cap {
        report.check(
            "kernel equals the free Lie subspace",
            &format!("n={n}"),
            || {
                let trees = enumerate_rooted_trees(&labels(n))?;
                let tree_basis = BasisIndex::new(trees);
                let lie = lie_basis(n)?;
                let lie_cols: Vec<BTreeMap<usize, Q>> = lie
                    .iter()
                    .map(|v| {
                        tree_basis
                            .coordinates(v)
                            .ok_or_else(|| anyhow::anyhow!("basis mismatch"))
                    })
                    .collect::<Result<_>>()?;
                let lie_matrix =
                    SparseRationalMatrix::from_columns(tree_basis.len(), lie_cols)?;
                let solver = Solver::new(&lie_matrix);
                let kernel = divergence_matrix(n, 2)?.kernel_basis();
                let contained = kernel.iter().all(|v| solver.solve(v).is_some());
                let spans = lie_matrix.rank() == kernel.len();
                Ok(("both".to_string(), match (contained, spans) {
                    (true, true) => "both".to_string(),
                    (true, false) => "kernel only".to_string(),
                    (false, true) => "dimension only".to_string(),
                    (false, false) => "neither".to_string(),
                }))
            },
        );
    }
    Ok(report)
}

fn embedding(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("embedding", config)?;
    let mut report = VerificationReport::new("embedding");
    for n in 1..=cap {
        report.check("generated aroma span dimension", &format!("n={n}"), || {
            Ok((
                (n as u64 + 1).pow(n as u32 - 1).to_string(),
                suboperad_span_dimension(n)?.to_string(),
            ))
        });
    }
    if cap >= 3 {
        report.check(
            "three-cycle orientation difference is unreachable",
            "n=3",
            || {
                let basis = aromalab_core::operad::aroma_span_basis(3)?;
                let ambient = BasisIndex::new(enumerate_aromas(&labels(3), 1)?);
                let cols = basis
                    .iter()
                    .map(|v| {
                        ambient
                            .coordinates(v)
                            .ok_or_else(|| anyhow::anyhow!("basis mismatch"))
                    })
                    .collect::<Result<_>>()?;
                let matrix = SparseRationalMatrix::from_columns(ambient.len(), cols)?;
                let solver = Solver::new(&matrix);
                let mut diff: LinComb<Aroma> =
                    LinComb::term(Aroma::cycle_of(&[1, 2, 3])?, qi(1));
                diff.add_term(Aroma::cycle_of(&[1, 3, 2])?, qi(-1));
                let coords = ambient
                    .coordinates(&diff)
                    .ok_or_else(|| anyhow::anyhow!("basis mismatch"))?;
                Ok((
                    "outside".to_string(),
                    if solver.solve(&coords).is_none() {
                        "outside".to_string()
                    } else {
                        "inside".to_string()
                    },
                ))
            },
        );
    }
    Ok(report)
}

fn ce_homology(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("ce-homology", config)?;
    let mut report = VerificationReport::new("ce-homology");
    for n in 1..=cap {
        report.check("full-divergence homology", &format!("n={n}"), || {
            let c = build_ce_complex(CeVariant::Full, n)?;
            let mut expected = vec![0usize; n + 1];
            if n >= 2 {
                expected[0] = (n - 1).pow(n as u32);
            }
            Ok((
                format!("{expected:?}"),
                format!("{:?}", c.complex().homology_dimensions()),
            ))
        });
    }
    for n in 1..=cap {
        report.check("reduced-divergence homology", &format!("n={n}"), || {
            let c = build_ce_complex(CeVariant::Reduced, n)?;
            let mut expected = vec![0usize; n + 1];
            if n >= 3 {
                expected[0] = (n - 2).pow(n as u32);
            }
            if n == 1 {
                expected[1] = 1;
            }
            Ok((
                format!("{expected:?}"),
                format!("{:?}", c.complex().homology_dimensions()),
            ))
        });
    }
    Ok(report)
}

fn bicomplex(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("bicomplex", config)?;
    let mut report = VerificationReport::new("bicomplex");
    for n in 1..=cap {
        for (variant, tag) in [(CeVariant::Full, "full"), (CeVariant::Reduced, "loop-free")] {
            report.check(
                "vertical homology vanishes",
                &format!("n={n} variant={tag}"),
                || {
                    let b = build_aromatic_bicomplex(variant, n)?;
                    let nonzero = b
                        .vertical_homology()?
                        .into_iter()
                        .filter(|&(_, d)| d != 0)
                        .count();
                    Ok(("0".to_string(), nonzero.to_string()))
                },
            );
            report.check(
                "horizontal homology concentration",
                &format!("n={n} variant={tag}"),
                || {
                    let b = build_aromatic_bicomplex(variant, n)?;
                    let max_row = if variant == CeVariant::Full { 0 } else { 1 };
                    let stray: usize = b
                        .horizontal_homology()?
                        .into_iter()
                        .filter(|&((p, _), d)| p > max_row && d != 0)
                        .map(|(_, d)| d)
                        .sum();
                    Ok(("0".to_string(), stray.to_string()))
                },
            );
            report.check(
                "bigraded dimensions match the chain-level model",
                &format!("n={n} variant={tag}"),
                || {
                    let b = build_aromatic_bicomplex(variant, n)?;
                    let ce = build_ce_complex(variant, n)?;
                    Ok(("match".to_string(), if b.dimensions_match_ce(&ce)? {
                        "match".to_string()
                    } else {
                        "mismatch".to_string()
                    }))
                },
            );
        }
    }
    report.check("loop-free row-one homology at one vertex", "n=1", || {
        let b = build_aromatic_bicomplex(CeVariant::Reduced, 1)?;
        let h = b.horizontal_homology()?;
        Ok((
            "[1, 1]".to_string(),
            format!("{:?}", [h[&(1, 0)], h[&(1, 1)]]),
        ))
    });
    for n in 2..=cap {
        report.check(
            "loop-free row-zero homology matches characters",
            &format!("n={n}"),
            || {
                let b = build_aromatic_bicomplex(CeVariant::Reduced, n)?;
                let h = b.horizontal_homology()?;
                let observed: Vec<Q> = (0..=n).map(|w| qi(h[&(0, w)] as i64)).collect();
                let predicted: Vec<Q> = (0..=n).map(|w| expected_reduced_h0(n, w)).collect();
                Ok((format!("{predicted:?}"), format!("{observed:?}")))
            },
        );
    }
    Ok(report)
}

fn graph_complex(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("graph-complex", config)?;
    let mut report = VerificationReport::new("graph-complex");
    for n in 1..=cap {
        report.check("plain variant homology", &format!("n={n}"), || {
            let c = build_graph_complex(GraphVariant::All, n)?;
            let total: usize = c.complex().homology_dimensions().iter().sum();
            let expected = if n == 1 { 1 } else { 0 };
            Ok((expected.to_string(), total.to_string()))
        });
    }
    for n in 2..=cap {
        report.check("contracting homotopy identity", &format!("n={n}"), || {
            let c = build_graph_complex(GraphVariant::All, n)?;
            Ok(("holds".to_string(), if c.homotopy_identity_holds()? {
                "holds".to_string()
            } else {
                "fails".to_string()
            }))
        });
    }
    for n in 1..=cap {
        report.check(
            "connected variant total homology",
            &format!("n={n}"),
            || {
                let c = build_graph_complex(GraphVariant::Connected, n)?;
                let total: usize = c.complex().homology_dimensions().iter().sum();
                let factorial: usize = (1..n).product::<usize>().max(1);
                Ok((factorial.to_string(), total.to_string()))
            },
        );
    }
    Ok(report)
}

fn bseries(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("bseries", config)?;
    let divergence_cap = cap.min(4);
    let mut report = VerificationReport::new("bseries");
    let f = PolyVectorField::random_cubic(3, config.seed)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    for m in 1..=divergence_cap {
        for key in enumerate_unlabelled(UnlabelledKind::Tree, m)? {
            report.check(
                "divergence of a tree differential closes into cycles",
                &format!("tree={key} d=3"),
                || {
                    Ok(("equal".to_string(), if check_divergence_identity(&key, &f)? {
                        "equal".to_string()
                    } else {
                        "different".to_string()
                    }))
                },
            );
        }
    }
    report.check(
        "exact flow has no volume obstruction",
        &format!("order<={cap}"),
        || {
            let b = BSeriesCoefficients::exact_flow(cap)?;
            Ok(("0".to_string(), volume_obstruction(&b)?.len().to_string()))
        },
    );
    for m in 2..=cap {
        for key in enumerate_unlabelled(UnlabelledKind::Tree, m)? {
            report.check(
                "higher-tree support is obstructed at its order",
                &format!("tree={key}"),
                || {
                    let b = BSeriesCoefficients::from_support(
                        cap,
                        BTreeMap::from([
                            (UnlabelledKey::new("()"), qi(1)),
                            (key.clone(), qi(1)),
                        ]),
                    )?;
                    let orders: Vec<usize> =
                        volume_obstruction(&b)?.keys().copied().collect();
                    Ok((format!("{:?}", [m]), format!("{orders:?}")))
                },
            );
        }
    }
    Ok(report)
}

fn characters(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("characters", config)?;
    let mut report = VerificationReport::new("characters");
    for n in 1..=cap {
        report.check(
            "product formula matches homology traces",
            &format!("n={n}"),
            || {
                let r = character_check(n)?;
                let mismatches = r.checks.iter().filter(|c| !c.matches).count();
                Ok(("0".to_string(), mismatches.to_string()))
            },
        );
    }
    for n in 2..=cap {
        report.check(
            "degree-zero trace equals the alternating sum",
            &format!("n={n}"),
            || {
                let r = character_check(n)?;
                let mismatches = r
                    .checks
                    .iter()
                    .filter(|c| c.h0_trace != c.lefschetz)
                    .count();
                Ok(("0".to_string(), mismatches.to_string()))
            },
        );
    }
    Ok(report)
}

fn identities(config: &Config) -> Result<VerificationReport> {
    let cap = resolve_cap("identities", config)?;
    let mut report = VerificationReport::new("identities");
    for n in 1..=cap {
        report.check("binomial convolution identity", &format!("n={n}"), || {
            Ok(("holds".to_string(), if abel_identity_holds(n) {
                "holds".to_string()
            } else {
                "fails".to_string()
            }))
        });
    }
    report.check("Euler characteristic closed form", "n<=8", || {
        let chi = euler_characteristic_series(8)?;
        let expected: Vec<String> = (1..=8)
            .map(|n: i64| (n - 2).pow(n as u32).to_string())
            .collect();
        let observed: Vec<String> = chi.iter().map(|z| z.to_string()).collect();
        Ok((format!("{expected:?}"), format!("{observed:?}")))
    });
    report.check(
        "Euler characteristics match the built complexes",
        "n<=4",
        || {
            let chi = euler_characteristic_series(4)?;
            let built: Vec<String> = (1..=4)
                .map(|n| {
                    build_ce_complex(CeVariant::Reduced, n)
                        .map(|c| c.complex().euler_characteristic().to_string())
                })
                .collect::<std::result::Result<_, _>>()?;
            let series: Vec<String> = chi.iter().map(|z| z.to_string()).collect();
            Ok((format!("{series:?}"), format!("{built:?}")))
        },
    );
    Ok(report)
}
