//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them on success).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperstats::asymp::{
    self, convergence_ratio, regular_directed, regular_undirected,
};
use hyperstats::combin::{enumerate_r, enumerate_r_hat, multiplicity_vectors, MultiplicityVector};
use hyperstats::exact::{
    digraph_multi_pair_closed_form, digraph_self_loop_closed_form, expected_degenerate,
    expected_degenerate_directed, expected_multi_pairs, expected_multi_pairs_directed,
    expected_self_loops, expected_weak_self_loops, graph_multi_pair_closed_form,
    graph_self_loop_closed_form,
};
use hyperstats::model::{DirectedHypergraph, Hypergraph};
use hyperstats::oracle::{
    brute_force_directed, brute_force_undirected, directed_catalog, run_corollary_trials,
    run_main_lemma_trials, undirected_catalog,
};
use hyperstats::sampler::{monte_carlo_directed, monte_carlo_undirected, MonteCarloConfig};
use hyperstats::{DirectedDegreeSequence, UndirectedDegreeSequence};

fn report(criterion: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("acceptance {criterion}: PASS"),
        Err(msg) => println!("acceptance {criterion}: FAIL ({msg})"),
    }
    if let Err(msg) = result {
        panic!("{criterion} failed: {msg}");
    }
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let run = || -> Result<(), String> {
        let undirected = undirected_catalog();
        if undirected.len() < 50 {
            return Err(format!("only {} undirected instances", undirected.len()));
        }
        for (i, ds) in undirected.iter().enumerate() {
            let truth = brute_force_undirected(ds).map_err(|e| e.to_string())?;
            let dh = expected_degenerate(ds).map_err(|e| e.to_string())?.value;
            let m = expected_multi_pairs(ds).map_err(|e| e.to_string())?.value;
            if truth.degenerate != dh {
                return Err(format!("undirected #{i}: DH {} != {}", truth.degenerate, dh));
            }
            if truth.multi_pairs != m {
                return Err(format!("undirected #{i}: M {} != {}", truth.multi_pairs, m));
            }
        }
        let directed = directed_catalog();
        if directed.len() < 30 {
            return Err(format!("only {} directed instances", directed.len()));
        }
        for (i, dds) in directed.iter().enumerate() {
            let truth = brute_force_directed(dds).map_err(|e| e.to_string())?;
            let dh = expected_degenerate_directed(dds).map_err(|e| e.to_string())?.value;
            let m = expected_multi_pairs_directed(dds).map_err(|e| e.to_string())?.value;
            let s = expected_self_loops(dds).map_err(|e| e.to_string())?.value;
            let ws = expected_weak_self_loops(dds).map_err(|e| e.to_string())?.value;
            if truth.degenerate != dh {
                return Err(format!("directed #{i}: DH {} != {}", truth.degenerate, dh));
            }
            if truth.multi_pairs != m {
                return Err(format!("directed #{i}: M {} != {}", truth.multi_pairs, m));
            }
            if truth.self_loops != s {
                return Err(format!("directed #{i}: S {} != {}", truth.self_loops, s));
            }
            if truth.weak_self_loops != ws {
                return Err(format!(
                    "directed #{i}: WS {} != {}",
                    truth.weak_self_loops, ws
                ));
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        if elapsed >= 120.0 {
            return Err(format!("runtime {elapsed:.1}s >= 120s"));
        }
        Ok(())
    };
    report("criterion 1 (oracle equivalence)", run());
}

#[test]
fn criterion_2_graph_reductions() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(20260826);
        // 100 random graph sequences: every edge of size 2
        for trial in 0..100 {
            let m = rng.random_range(2..=20u64);
            let n = rng.random_range(2..=50usize);
            let mut d = vec![0u64; n];
            for _ in 0..2 * m {
                d[rng.random_range(0..n)] += 1;
            }
            let ds = UndirectedDegreeSequence::new(d, vec![2; m as usize])
                .map_err(|e| e.to_string())?;
            let dh = expected_degenerate(&ds).map_err(|e| e.to_string())?.value;
            let closed = graph_self_loop_closed_form(&ds).map_err(|e| e.to_string())?;
            if dh != closed {
                return Err(format!("graph trial {trial}: DH {dh} != {closed}"));
            }
            let mp = expected_multi_pairs(&ds).map_err(|e| e.to_string())?.value;
            let closed = graph_multi_pair_closed_form(&ds).map_err(|e| e.to_string())?;
            if mp != closed {
                return Err(format!("graph trial {trial}: M {mp} != {closed}"));
            }
        }
        // 100 random digraph sequences: every tail and head of size 1
        for trial in 0..100 {
            let m = rng.random_range(2..=20u64);
            let n = rng.random_range(2..=50usize);
            let mut dout = vec![0u64; n];
            let mut din = vec![0u64; n];
            for _ in 0..m {
                dout[rng.random_range(0..n)] += 1;
                din[rng.random_range(0..n)] += 1;
            }
            let dds = DirectedDegreeSequence::new(
                dout,
                din,
                vec![1; m as usize],
                vec![1; m as usize],
            )
            .map_err(|e| e.to_string())?;
            let dh = expected_degenerate_directed(&dds).map_err(|e| e.to_string())?.value;
            if !dh.is_zero() {
                return Err(format!("digraph trial {trial}: DH {dh} != 0"));
            }
            let mp = expected_multi_pairs_directed(&dds).map_err(|e| e.to_string())?.value;
            let closed = digraph_multi_pair_closed_form(&dds).map_err(|e| e.to_string())?;
            if mp != closed {
                return Err(format!("digraph trial {trial}: M {mp} != {closed}"));
            }
            let s = expected_self_loops(&dds).map_err(|e| e.to_string())?.value;
            let ws = expected_weak_self_loops(&dds).map_err(|e| e.to_string())?.value;
            let closed = digraph_self_loop_closed_form(&dds).map_err(|e| e.to_string())?;
            if s != closed {
                return Err(format!("digraph trial {trial}: S {s} != {closed}"));
            }
            if ws != s {
                return Err(format!("digraph trial {trial}: WS {ws} != S {s}"));
            }
        }
        Ok(())
    };
    report("criterion 2 (graph/digraph reductions)", run());
}

#[test]
fn criterion_3_identity_suite() {
    let start = Instant::now();
    let run = || -> Result<(), String> {
        let cor = run_corollary_trials(200, 31, 4, 2).map_err(|e| e.to_string())?;
        if cor.failures > 0 {
            return Err(format!("{} corollary trials failed", cor.failures));
        }
        let main = run_main_lemma_trials(100, 32, 3, 1).map_err(|e| e.to_string())?;
        if main.failures > 0 {
            return Err(format!("{} main-lemma trials failed", main.failures));
        }
        let elapsed = start.elapsed().as_secs_f64();
        if elapsed >= 60.0 {
            return Err(format!("runtime {elapsed:.1}s >= 60s"));
        }
        Ok(())
    };
    report("criterion 3 (identity suite)", run());
}

#[test]
fn criterion_4_monte_carlo_coverage() {
    let start = Instant::now();
    let run = || -> Result<(), String> {
        let samples = 20_000;
        // undirected: n = 300, 3-regular, edges of size 3
        let ds = regular_undirected(300, 3, 3).map_err(|e| e.to_string())?;
        let exact_dh = expected_degenerate(&ds).map_err(|e| e.to_string())?.value.to_f64();
        let exact_m = expected_multi_pairs(&ds).map_err(|e| e.to_string())?.value.to_f64();
        let cfg = MonteCarloConfig {
            samples,
            seed: 41,
            workers: 1,
        };
        let est1 = monte_carlo_undirected(&ds, &cfg);
        let est8 = monte_carlo_undirected(
            &ds,
            &MonteCarloConfig {
                workers: 8,
                ..cfg
            },
        );
        if est1.degenerate.sum != est8.degenerate.sum
            || est1.multi_pairs.sum != est8.multi_pairs.sum
        {
            return Err("worker counts 1 and 8 disagree (undirected)".into());
        }
        for (name, est, exact) in [
            ("DH", est1.degenerate, exact_dh),
            ("M", est1.multi_pairs, exact_m),
        ] {
            let dev = (est.mean - exact).abs();
            if dev > 4.0 * est.std_error {
                return Err(format!(
                    "{name}: |{} - {exact}| > 4·SE ({})",
                    est.mean, est.std_error
                ));
            }
        }
        // directed: n = 300, out/in degree 2, tail/head size 2
        let dds = regular_directed(300, 2, 2, 2, 2).map_err(|e| e.to_string())?;
        let exact_s = expected_self_loops(&dds).map_err(|e| e.to_string())?.value.to_f64();
        let exact_ws =
            expected_weak_self_loops(&dds).map_err(|e| e.to_string())?.value.to_f64();
        let dest1 = monte_carlo_directed(&dds, &cfg);
        let dest8 = monte_carlo_directed(
            &dds,
            &MonteCarloConfig {
                workers: 8,
                ..cfg
            },
        );
        if dest1.self_loops.sum != dest8.self_loops.sum
            || dest1.weak_self_loops.sum != dest8.weak_self_loops.sum
        {
            return Err("worker counts 1 and 8 disagree (directed)".into());
        }
        for (name, est, exact) in [
            ("S", dest1.self_loops, exact_s),
            ("WS", dest1.weak_self_loops, exact_ws),
        ] {
            let dev = (est.mean - exact).abs();
            if dev > 4.0 * est.std_error {
                return Err(format!(
                    "{name}: |{} - {exact}| > 4·SE ({})",
                    est.mean, est.std_error
                ));
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        if elapsed >= 300.0 {
            return Err(format!("runtime {elapsed:.1}s >= 300s"));
        }
        Ok(())
    };
    report("criterion 4 (Monte Carlo coverage)", run());
}

#[test]
fn criterion_5_asymptotic_convergence() {
    let run = || -> Result<(), String> {
        let ns = [102u64, 1002, 10002];
        // pinned regression values from the first computation of each ladder
        let pins_dh = [1.00108, 1.00011, 1.00001];
        let pins_m = [1.00986, 1.00100, 1.00010];
        let pins_s = [1.00121, 1.00012, 1.00001];
        let pins_ws = [0.99018, 0.99900, 0.99990];
        let pins_dir_dh = [1.00245, 1.00025, 1.00002];

        let check_ladder =
            |name: &str, ratios: &[f64], pins: &[f64]| -> Result<(), String> {
                for (i, (&r, &p)) in ratios.iter().zip(pins).enumerate() {
                    if (r - p).abs() > 1e-3 {
                        return Err(format!("{name} ratio[{i}] {r:.5} drifted from pin {p}"));
                    }
                }
                let devs: Vec<f64> = ratios.iter().map(|r| (r - 1.0).abs()).collect();
                if !(devs[0] >= devs[1] && devs[1] >= devs[2]) {
                    return Err(format!("{name} |ratio-1| not non-increasing: {devs:?}"));
                }
                if devs[2] >= 0.05 {
                    return Err(format!("{name} final deviation {} >= 0.05", devs[2]));
                }
                Ok(())
            };

        let mut dh = Vec::new();
        let mut m = Vec::new();
        for &n in &ns {
            let ds = regular_undirected(n, 3, 3).map_err(|e| e.to_string())?;
            let exact = expected_degenerate(&ds).map_err(|e| e.to_string())?.value.to_f64();
            dh.push(convergence_ratio(
                exact,
                asymp::degenerate_asymptotic(ds.vertex_degrees(), 3),
            ));
            let exact = expected_multi_pairs(&ds).map_err(|e| e.to_string())?.value.to_f64();
            m.push(convergence_ratio(
                exact,
                asymp::multi_pairs_asymptotic(ds.vertex_degrees(), 3),
            ));
        }
        check_ladder("DH", &dh, &pins_dh)?;
        check_ladder("M", &m, &pins_m)?;

        let mut s = Vec::new();
        let mut ws = Vec::new();
        let mut dir_dh = Vec::new();
        for &n in &ns {
            let dds = regular_directed(n, 2, 2, 2, 2).map_err(|e| e.to_string())?;
            let exact = expected_self_loops(&dds).map_err(|e| e.to_string())?.value.to_f64();
            s.push(convergence_ratio(
                exact,
                asymp::self_loops_asymptotic(dds.out_degrees(), dds.in_degrees(), 2),
            ));
            let exact =
                expected_weak_self_loops(&dds).map_err(|e| e.to_string())?.value.to_f64();
            ws.push(convergence_ratio(
                exact,
                asymp::weak_self_loops_asymptotic(dds.out_degrees(), dds.in_degrees(), 2),
            ));
            let exact =
                expected_degenerate_directed(&dds).map_err(|e| e.to_string())?.value.to_f64();
            dir_dh.push(convergence_ratio(
                exact,
                asymp::degenerate_directed_asymptotic(dds.out_degrees(), dds.in_degrees(), 2, 2),
            ));
        }
        check_ladder("S", &s, &pins_s)?;
        check_ladder("WS", &ws, &pins_ws)?;
        check_ladder("directed DH", &dir_dh, &pins_dir_dh)?;
        Ok(())
    };
    report("criterion 5 (asymptotic convergence)", run());
}

#[test]
fn criterion_6_enumeration_pins() {
    let run = || -> Result<(), String> {
        // the five multiplicity vectors for δ = 4
        let mv4: Vec<Vec<u64>> = multiplicity_vectors(4)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|a| a.counts().to_vec())
            .collect();
        let expected4 = vec![
            vec![4, 0, 0, 0],
            vec![2, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![0, 2, 0, 0],
            vec![0, 0, 0, 1],
        ];
        if mv4 != expected4 {
            return Err(format!("multiplicity vectors of 4: {mv4:?}"));
        }
        // four partitions of a = (2,1,0,0)
        let a = MultiplicityVector::new(vec![2, 1, 0, 0]).unwrap();
        let r = enumerate_r(&a).map_err(|e| e.to_string())?;
        if r.len() != 4 {
            return Err(format!("R((2,1,0,0)) has {} partitions", r.len()));
        }
        // four joint partitions of a = (0,1), b = (2,0)
        let a = MultiplicityVector::new(vec![0, 1]).unwrap();
        let b = MultiplicityVector::new(vec![2, 0]).unwrap();
        let rh = enumerate_r_hat(&a, &b).map_err(|e| e.to_string())?;
        if rh.len() != 4 {
            return Err(format!("R̂((0,1),(2,0)) has {} partitions", rh.len()));
        }
        // worked example hypergraphs (vertices a..f = 0..5)
        let h = Hypergraph::new(6, vec![vec![0, 1, 3], vec![0, 1, 3], vec![2, 2, 5]]);
        if h.count_degenerate() != 1 || h.count_multi_pairs() != 1 {
            return Err("undirected example counts wrong".into());
        }
        let h = DirectedHypergraph::new(
            6,
            vec![
                (vec![0, 3], vec![0, 1]),
                (vec![3, 3], vec![4]),
                (vec![1], vec![2]),
                (vec![1], vec![2]),
                (vec![2, 5], vec![2, 5]),
            ],
        );
        if h.count_degenerate() != 1
            || h.count_multi_pairs() != 1
            || h.count_self_loops() != 1
            || h.count_weak_self_loops() != 2
        {
            return Err("directed example counts wrong".into());
        }
        Ok(())
    };
    report("criterion 6 (enumeration pins)", run());
}
