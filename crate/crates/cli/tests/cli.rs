//! End-to-end tests of the `fdvrp` binary: every subcommand, the exit-code
//! contract, and determinism of file outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fdvrp::instgen::{parse_instance, write_instance};
use fdvrp::routing::parse_matrix;
use fdvrp::solution::{parse_solution, write_solution, Solution, Token};
use fdvrp::streetmap::serialize_model;
use fdvrp::synth::grid48;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fdvrp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn fdvrp")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Temp dir with the 48-street grid model written to model.txt.
fn setup() -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let model_path = dir.path().join("model.txt");
    std::fs::write(&model_path, serialize_model(&grid48())).unwrap();
    (dir, model_path)
}

fn generate_tiny(dir: &Path, model: &Path) -> PathBuf {
    // Large r_max so the tiny instance stays feasible end to end.
    let list = dir.join("instances.txt");
    std::fs::write(&list, "tiny 10 2 5 1 60000\n").unwrap();
    let out = run(&[
        "generate",
        "--model",
        model.to_str().unwrap(),
        "--instances",
        list.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    dir.join("tiny.instance.txt")
}

#[test]
fn validate_reports_counts() {
    let (_dir, model) = setup();
    let out = run(&["validate", "--model", model.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("48 streets, 1 component"), "{text}");
    assert!(text.contains("0 zero-weight streets"), "{text}");
}

#[test]
fn validate_rejects_malformed_model_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(
        &path,
        "PIXEL_VALUE 0.137\nDELIVERY_COST 2190\nMAX_ROUTE 13138\nSTREETS 1\nA [CENTRAL,STREET,MIXED]\n[0,0]-[oops,3]\n",
    )
    .unwrap();
    let out = run(&["validate", "--model", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 6"), "{}", stderr(&out));
}

#[test]
fn missing_files_exit_2() {
    let out = run(&["validate", "--model", "/nonexistent/model.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_is_deterministic_and_headers_match() {
    let (dir, model) = setup();
    let list = dir.path().join("instances.txt");
    std::fs::write(&list, "a 10 2 5 1\nb 20 3 5 2\n").unwrap();
    for sub in ["g1", "g2"] {
        let out = run(&[
            "generate",
            "--model",
            model.to_str().unwrap(),
            "--instances",
            list.to_str().unwrap(),
            "--out",
            dir.path().join(sub).to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    for name in ["a.instance.txt", "b.instance.txt"] {
        let one = std::fs::read(dir.path().join("g1").join(name)).unwrap();
        let two = std::fs::read(dir.path().join("g2").join(name)).unwrap();
        assert_eq!(one, two, "{name} must be byte-identical across runs");
    }
    let text = std::fs::read_to_string(dir.path().join("g1/b.instance.txt")).unwrap();
    assert!(text.contains("NAME b"));
    assert!(text.contains("DELIVERIES 20"));
    assert!(text.contains("DEPOTS 3"));
    assert!(text.contains("MAX_VEHICLES 5"));
}

#[test]
fn seed_override_changes_the_sites() {
    let (dir, model) = setup();
    let list = dir.path().join("instances.txt");
    std::fs::write(&list, "a 10 2 5 1\n").unwrap();
    let base = dir.path().join("base");
    let over = dir.path().join("over");
    for (out_dir, extra) in [(&base, None), (&over, Some("99"))] {
        let mut args = vec![
            "generate",
            "--model",
            model.to_str().unwrap(),
            "--instances",
            list.to_str().unwrap(),
            "--out",
            out_dir.to_str().unwrap(),
        ];
        if let Some(seed) = extra {
            args.push("--seed-override");
            args.push(seed);
        }
        let out = run(&args);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let one = std::fs::read_to_string(base.join("a.instance.txt")).unwrap();
    let two = std::fs::read_to_string(over.join("a.instance.txt")).unwrap();
    assert_ne!(one, two);
    assert!(two.contains("SEED 99"));
}

#[test]
fn solve_writes_solution_and_csv_row() {
    let (dir, model) = setup();
    let inst_path = generate_tiny(dir.path(), &model);
    let out = run(&[
        "solve",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--algo",
        "cluster",
        "--runs",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "algorithm,f1_hours,mean_time_ms,stddev_time_ms,f2,f3"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "cluster");

    // The default solution path swaps .instance.txt for .solution.txt.
    let sol_path = dir.path().join("tiny.solution.txt");
    let sol = parse_solution(&std::fs::read_to_string(&sol_path).unwrap()).unwrap();
    assert_eq!(sol.instance, "tiny");

    // Reported objectives equal an independent evaluation of that file.
    let model_parsed = fdvrp::streetmap::parse_model(&std::fs::read_to_string(&model).unwrap()).unwrap();
    let graph = fdvrp::streetmap::build_graph(&model_parsed);
    let inst = parse_instance(&std::fs::read_to_string(&inst_path).unwrap(), &model_parsed).unwrap();
    let oracle = inst.build_oracle(&model_parsed, &graph).unwrap();
    let f1_px = fdvrp::solution::f1(&sol.tokens, &oracle);
    let hours: f64 = row[1].parse().unwrap();
    assert!((hours - fdvrp::streetmap::px_to_hours(f1_px, &model_parsed)).abs() < 0.005 + 1e-9);
    let f2: usize = row[4].parse().unwrap();
    assert_eq!(f2, fdvrp::solution::f2(&sol.tokens));
}

#[test]
fn solve_improvement_ordering_across_algos() {
    let (dir, model) = setup();
    let inst_path = generate_tiny(dir.path(), &model);
    let mut f1_by_algo = Vec::new();
    for algo in ["cluster", "cluster+2opt", "cluster+3opt"] {
        let sol_path = dir.path().join(format!("{algo}.solution.txt"));
        let out = run(&[
            "solve",
            "--model",
            model.to_str().unwrap(),
            "--instance",
            inst_path.to_str().unwrap(),
            "--algo",
            algo,
            "--runs",
            "1",
            "--out",
            sol_path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));

        let model_parsed =
            fdvrp::streetmap::parse_model(&std::fs::read_to_string(&model).unwrap()).unwrap();
        let graph = fdvrp::streetmap::build_graph(&model_parsed);
        let inst =
            parse_instance(&std::fs::read_to_string(&inst_path).unwrap(), &model_parsed).unwrap();
        let oracle = inst.build_oracle(&model_parsed, &graph).unwrap();
        let sol = parse_solution(&std::fs::read_to_string(&sol_path).unwrap()).unwrap();
        f1_by_algo.push(fdvrp::solution::f1(&sol.tokens, &oracle));
    }
    assert!(f1_by_algo[1] <= f1_by_algo[0], "2-opt must not be worse than cluster");
    assert!(f1_by_algo[2] <= f1_by_algo[1], "3-opt must not be worse than 2-opt");
}

#[test]
fn evaluate_feasible_and_infeasible() {
    let (dir, model) = setup();
    let inst_path = generate_tiny(dir.path(), &model);
    let out = run(&[
        "solve",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--algo",
        "cluster+2opt",
        "--runs",
        "1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let sol_path = dir.path().join("tiny.solution.txt");

    let out = run(&[
        "evaluate",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--solution",
        sol_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("feasible true"));

    // Duplicate a client in the solution file: multiset error, exit 1.
    let sol = parse_solution(&std::fs::read_to_string(&sol_path).unwrap()).unwrap();
    let mut tampered = sol.tokens.clone();
    let first_client = tampered.iter().position(|t| matches!(t, Token::Client(_))).unwrap();
    let dup = tampered[first_client];
    tampered.push(dup);
    let bad_path = dir.path().join("bad.solution.txt");
    std::fs::write(
        &bad_path,
        write_solution(&Solution { instance: "tiny".into(), tokens: tampered }),
    )
    .unwrap();
    let out = run(&[
        "evaluate",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--solution",
        bad_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("multiset"), "{}", stdout(&out));
}

#[test]
fn evaluate_flags_over_length_routes() {
    let (dir, model) = setup();
    // Tight r_max: 10 deliveries on 2 depots cannot fit 3000 px per route.
    let list = dir.path().join("instances.txt");
    std::fs::write(&list, "tight 10 2 5 1 3000\n").unwrap();
    let out = run(&[
        "generate",
        "--model",
        model.to_str().unwrap(),
        "--instances",
        list.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let inst_path = dir.path().join("tight.instance.txt");
    let out = run(&[
        "solve",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--runs",
        "1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let out = run(&[
        "evaluate",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--solution",
        dir.path().join("tight.solution.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("feasible false"), "{text}");
    assert!(text.contains("over-length"), "{text}");
    assert!(text.contains("> 3000 px"), "{text}");
}

#[test]
fn evaluate_reports_the_partition_route_count() {
    let (dir, model) = setup();
    let model_parsed =
        fdvrp::streetmap::parse_model(&std::fs::read_to_string(&model).unwrap()).unwrap();
    let graph = fdvrp::streetmap::build_graph(&model_parsed);
    let spec = fdvrp::instgen::InstanceSpec {
        name: "worked".into(),
        deliveries: 4,
        depots: 2,
        max_vehicles: 1,
        seed: 3,
        r_max: Some(60000),
    };
    let inst = fdvrp::instgen::generate(&model_parsed, &graph, &spec).unwrap();
    let inst_path = dir.path().join("worked.instance.txt");
    std::fs::write(&inst_path, write_instance(&inst)).unwrap();

    // (c1, c2, da, db, c3, c4): prefix route to depot 1, da's route is
    // empty and discarded, db serves the rest -> exactly 2 routes.
    let tokens = vec![
        Token::Client(0),
        Token::Client(1),
        Token::Depot(0),
        Token::Depot(1),
        Token::Client(2),
        Token::Client(3),
    ];
    let sol_path = dir.path().join("worked.solution.txt");
    std::fs::write(
        &sol_path,
        write_solution(&Solution { instance: "worked".into(), tokens }),
    )
    .unwrap();
    let out = run(&[
        "evaluate",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--solution",
        sol_path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    let data = text.lines().nth(1).unwrap();
    let f2 = data.split(',').nth(3).unwrap();
    assert_eq!(f2, "2", "{text}");
}

#[test]
fn render_map_and_solution() {
    let (dir, model) = setup();
    let svg_path = dir.path().join("map.svg");
    let out = run(&[
        "render",
        "--model",
        model.to_str().unwrap(),
        "--out",
        svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg "));
    assert_eq!(svg.matches("<path ").count(), 48);

    let inst_path = generate_tiny(dir.path(), &model);
    let out = run(&[
        "solve",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--runs",
        "1",
    ]);
    assert!(out.status.success());
    let sol_path = dir.path().join("tiny.solution.txt");
    let full_path = dir.path().join("solved.svg");
    let out = run(&[
        "render",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--solution",
        sol_path.to_str().unwrap(),
        "--out",
        full_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let svg = std::fs::read_to_string(&full_path).unwrap();
    assert_eq!(svg.matches("<circle ").count(), 10, "one dot per delivery");

    let sol = parse_solution(&std::fs::read_to_string(&sol_path).unwrap()).unwrap();
    let routes = fdvrp::solution::partition(&sol.tokens);
    assert_eq!(svg.matches("<polyline ").count(), routes.len());
    // Vertex count of each polyline = clients + depot at both ends.
    for (route, chunk) in routes.iter().zip(svg.split("<polyline points=\"").skip(1)) {
        let pts = &chunk[..chunk.find('"').unwrap()];
        assert_eq!(pts.split(' ').count(), route.clients.len() + 2);
    }
}

#[test]
fn distances_exports_a_symmetric_matrix() {
    let (dir, model) = setup();
    let inst_path = generate_tiny(dir.path(), &model);
    let matrix_path = dir.path().join("tiny.matrix.txt");
    let out = run(&[
        "distances",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--out",
        matrix_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (n, flat) = parse_matrix(&std::fs::read_to_string(&matrix_path).unwrap()).unwrap();
    assert_eq!(n, 12, "2 depots + 10 deliveries");
    for i in 0..n {
        assert_eq!(flat[i * n + i], 0);
        for j in 0..n {
            assert_eq!(flat[i * n + j], flat[j * n + i]);
        }
    }
}

#[test]
fn solution_for_wrong_instance_is_rejected() {
    let (dir, model) = setup();
    let inst_path = generate_tiny(dir.path(), &model);
    let sol_path = dir.path().join("other.solution.txt");
    std::fs::write(
        &sol_path,
        write_solution(&Solution {
            instance: "other".into(),
            tokens: vec![Token::Depot(0)],
        }),
    )
    .unwrap();
    let out = run(&[
        "evaluate",
        "--model",
        model.to_str().unwrap(),
        "--instance",
        inst_path.to_str().unwrap(),
        "--solution",
        sol_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("expected 'tiny'"), "{}", stderr(&out));
}
