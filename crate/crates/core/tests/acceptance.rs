//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the report always
//! shows up in `cargo test` output.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{
    all_monomials, apply, divides, ev, fiber_by_box, member, random_gens, random_gens_by_degree,
    random_matrix, raw_gens, rng, vertices_by_definition,
};
use num_bigint::BigInt;
use rand::Rng;
use staircase::decomposition::primary_decomposition;
use staircase::fibers::{self, demo};
use staircase::hilbert::{self, Grading};
use staircase::monomial::minimalize;
use staircase::posetlab::{self, XElem};
use staircase::{chains, hull, ExponentVector, FiberAtlas, FiberMatrix, MonomialIdeal};

/// Outcome of one criterion: `Err` carries the first discrepancy found.
type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed <= Duration::from_secs(limit_secs), || {
        format!("took {:.2}s, limit {limit_secs}s", elapsed.as_secs_f64())
    })
}

fn vecs(points: &[ExponentVector]) -> Vec<Vec<u64>> {
    points.iter().map(|p| p.as_slice().to_vec()).collect()
}

fn demo_reproduction() -> Check {
    let start = Instant::now();
    let a = demo::matrix();
    let atlas = FiberAtlas::new(&a);
    let (b1, b2) = (demo::b1(), demo::b2());
    let b = b1.checked_add(&b2).map_err(|e| e.to_string())?;
    let f1 = fibers::fiber_points(&a, &b1).map_err(|e| e.to_string())?;
    let f2 = fibers::fiber_points(&a, &b2).map_err(|e| e.to_string())?;
    ensure(f1 == demo::expected_b1_points(), || format!("fiber over b1 is {f1:?}"))?;
    ensure(f2 == demo::expected_b2_points(), || format!("fiber over b2 is {f2:?}"))?;
    // the box oracle agrees as well
    ensure(vecs(&f1) == fiber_by_box(&a, b1.as_slice()), || "b1 box oracle".into())?;
    ensure(vecs(&f2) == fiber_by_box(&a, b2.as_slice()), || "b2 box oracle".into())?;
    let mink = atlas.minkowski_decomposes(&b, &b1, &b2).map_err(|e| e.to_string())?;
    ensure(mink, || "Minkowski decomposition not found".into())?;
    let zero = MonomialIdeal::zero(a.cols());
    let lattice = atlas.ma_decomposes(&zero, &b, &b1, &b2).map_err(|e| e.to_string())?;
    ensure(!lattice.decomposes, || "lattice split unexpectedly succeeds".into())?;
    ensure(lattice.witness == Some(demo::expected_witness()), || {
        format!("witness {:?}", lattice.witness)
    })?;
    let atomic = atlas.is_atomic(&b).map_err(|e| e.to_string())?;
    ensure(!atomic, || "b1+b2 reported atomic".into())?;
    within(start.elapsed(), 10)?;
    Ok(format!(
        "3+3 fiber points, Minkowski split holds, lattice witness {:?}",
        demo::expected_witness().as_slice()
    ))
}

fn poset_checks() -> Check {
    let start = Instant::now();
    ensure(posetlab::verify_s_antichain(20), || "S_1..S_20 not an antichain".into())?;
    if let Some(v) = posetlab::check_partial_order(12) {
        return Err(format!("order axiom fails: {v:?}"));
    }
    let mut count = 0;
    for p in posetlab::ground_set(8) {
        let h = posetlab::descending_chain_max(p);
        ensure(h < p.j(), || format!("{p:?} has a chain of {h} below it"))?;
        count += 1;
    }
    // and the bound is attained along (0,1) < (0,2) < ... < (0,j)
    let top = posetlab::descending_chain_max(XElem::new(0, 8).map_err(|e| e.to_string())?);
    ensure(top == 7, || format!("height of (0,8) is {top}"))?;
    within(start.elapsed(), 5)?;
    Ok(format!("L=20 antichain, order axioms for j<=12, {count} chain bounds for j<=8"))
}

fn finiteness_substitutes() -> Check {
    let mut r = rng(3001);
    // (a) minimal generators
    for _ in 0..500 {
        let n = r.gen_range(1..=4);
        let gens = random_gens(&mut r, n, 6, 4);
        let out = minimalize(n, gens.iter().map(|g| ev(g))).map_err(|e| e.to_string())?;
        let out = raw_gens(&out);
        for (i, x) in out.iter().enumerate() {
            for (j, y) in out.iter().enumerate() {
                ensure(i == j || !divides(x, y), || format!("{x:?} | {y:?} in output"))?;
            }
            ensure(gens.contains(x), || format!("{x:?} is not an input"))?;
        }
        for g in &gens {
            ensure(member(&out, g), || format!("{g:?} not covered"))?;
        }
    }
    // (b) staircase antichains
    for k in 2..=12 {
        let f = chains::staircase_antichain(k).map_err(|e| e.to_string())?;
        ensure(chains::is_antichain(&f), || format!("k={k} has a comparable pair"))?;
    }
    // (c) primary decompositions
    for _ in 0..200 {
        let n = r.gen_range(1..=3);
        let i = MonomialIdeal::new(n, random_gens_by_degree(&mut r, n, 4, 5)).map_err(|e| e.to_string())?;
        let comps = primary_decomposition(&i).map_err(|e| e.to_string())?;
        let gens = raw_gens(&i);
        let cg: Vec<Vec<Vec<u64>>> = comps.iter().map(|c| raw_gens(&c.component)).collect();
        for m in all_monomials(n, 10) {
            let meet = cg.iter().all(|g| member(g, &m));
            ensure(meet == member(&gens, &m), || format!("{i:?} differs at {m:?}"))?;
        }
    }
    Ok("500 minimalizations, k=2..12 antichains, 200 decompositions through degree 10".into())
}

fn hilbert_consistency() -> Check {
    let start = Instant::now();
    let mut r = rng(4001);
    let mut done = 0;
    while done < 100 {
        let n = r.gen_range(1..=3);
        let gens = random_gens(&mut r, n, 5, 4);
        let i = MonomialIdeal::new(n, gens.clone()).map_err(|e| e.to_string())?;
        if i.is_unit() {
            continue;
        }
        let num = hilbert::hilbert_numerator(&i).map_err(|e| e.to_string())?;
        let fine = Grading::fine(n);
        for b in all_monomials(n, 8) {
            let count = i64::from(!member(&gens, &b));
            let series = num.series_coefficient(&ev(&b));
            ensure(series == count, || format!("{i:?} at {b:?}: {series} vs {count}"))?;
            let h = hilbert::hilbert_function(&i, &fine, &ev(&b)).map_err(|e| e.to_string())?;
            ensure(h as i64 == count, || format!("{i:?} function at {b:?}"))?;
        }
        done += 1;
    }
    within(start.elapsed(), 30)?;
    Ok("100 ideals, all degrees |b| <= 8".into())
}

/// A degree `Au` with `u` in `{0,1}^n`, resampled until the fiber is small
/// enough for the subset-search hull oracle.
fn small_degree(r: &mut rand_chacha::ChaCha8Rng, a: &FiberMatrix) -> Vec<u64> {
    loop {
        let u: Vec<u64> = (0..a.cols()).map(|_| r.gen_range(0..=1)).collect();
        let b = apply(a, &u);
        if fiber_by_box(a, &b).len() <= 20 {
            return b;
        }
    }
}

fn fiber_hull_oracles() -> Check {
    let start = Instant::now();
    let mut r = rng(5001);
    let mut points_seen = 0;
    for _ in 0..100 {
        let a = random_matrix(&mut r, 3, 5, 3);
        let b = small_degree(&mut r, &a);
        let pts = fibers::fiber_points(&a, &ev(&b)).map_err(|e| e.to_string())?;
        ensure(vecs(&pts) == fiber_by_box(&a, &b), || format!("{a:?} b={b:?} fiber"))?;
        let verts = hull::hull_vertices(&pts).map_err(|e| e.to_string())?;
        ensure(vecs(&verts) == vertices_by_definition(&vecs(&pts)), || {
            format!("{a:?} b={b:?} vertices {verts:?}")
        })?;
        points_seen += pts.len();
    }
    within(start.elapsed(), 60)?;
    Ok(format!("100 matrices, {points_seen} fiber points"))
}

fn definition_strength() -> Check {
    let mut r = rng(6001);
    let mut instances = 0;
    let mut strict = 0;
    for _ in 0..200 {
        let a = random_matrix(&mut r, 3, 5, 3);
        let u: Vec<u64> = (0..a.cols()).map(|_| r.gen_range(0..=2)).collect();
        let b = ev(&apply(&a, &u));
        let atlas = FiberAtlas::new(&a);
        let zero = MonomialIdeal::zero(a.cols());
        for (b1, b2) in atlas.splits(&b).map_err(|e| e.to_string())? {
            let lattice = atlas.ma_decomposes(&zero, &b, &b1, &b2).map_err(|e| e.to_string())?;
            let mink = atlas.minkowski_decomposes(&b, &b1, &b2).map_err(|e| e.to_string())?;
            ensure(!lattice.decomposes || mink, || {
                format!("{a:?}: {b:?} = {b1:?} + {b2:?} splits as lattice points only")
            })?;
            instances += 1;
            strict += usize::from(mink && !lattice.decomposes);
        }
    }
    // the 4x6 matrix supplies the converse
    let a = demo::matrix();
    let atlas = FiberAtlas::new(&a);
    let (b1, b2) = (demo::b1(), demo::b2());
    let b = b1.checked_add(&b2).map_err(|e| e.to_string())?;
    let zero = MonomialIdeal::zero(a.cols());
    let mink = atlas.minkowski_decomposes(&b, &b1, &b2).map_err(|e| e.to_string())?;
    let lattice = atlas.ma_decomposes(&zero, &b, &b1, &b2).map_err(|e| e.to_string())?;
    ensure(mink && !lattice.decomposes, || "4x6 converse instance missing".into())?;
    Ok(format!(
        "{instances} random splits with no violation ({strict} strict), plus the 4x6 converse"
    ))
}

fn sagbi_desk_check() -> Check {
    let a = FiberMatrix::new(vec![vec![1, 1]]).map_err(|e| e.to_string())?;
    let c = [2i64, 3];
    let basis = fibers::sagbi_generators(&a, &c, 5).map_err(|e| e.to_string())?;
    ensure(
        basis.len() == 1 && basis[0].coefficient == BigInt::from(1) && basis[0].degree == ev(&[1]),
        || format!("basis {basis:?}"),
    )?;
    let mut r = rng(7001);
    for _ in 0..20 {
        let u = [r.gen_range(0..=10u64), r.gen_range(0..=10u64)];
        let expected = num_traits::pow(BigInt::from(2), u[0] as usize)
            * num_traits::pow(BigInt::from(3), u[1] as usize);
        let f = fibers::sagbi_factor(&a, &c, &basis, &ev(&u))
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no factorization for {u:?}"))?;
        ensure(f.remainder == expected, || format!("u={u:?}: r={}", f.remainder))?;
        ensure(f.exponents == vec![u[0] + u[1]], || format!("u={u:?}: phi={:?}", f.exponents))?;
    }
    Ok("basis [(1,(1))], 20 reconstructions with r = 2^u1 3^u2".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("4x6 matrix fiber reproduction", demo_reproduction),
        ("poset X antichain, order axioms, chain bound", poset_checks),
        ("minimalization, staircase antichains, decomposition", finiteness_substitutes),
        ("Hilbert numerator vs counting", hilbert_consistency),
        ("fiber and hull oracle equivalence", fiber_hull_oracles),
        ("lattice splitting implies Minkowski splitting", definition_strength),
        ("SAGBI reconstruction over [1 1]", sagbi_desk_check),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
