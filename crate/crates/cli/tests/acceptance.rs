//! Acceptance gate. Runs every criterion at its stated tolerance and time
//! limit, printing one PASS/FAIL line each; exits nonzero on any failure.

#![allow(clippy::needless_range_loop)]

use std::collections::HashMap;
use std::time::{Duration, Instant};

use difun::combinatorics::{bell, oeis_fixtures, stirling2};
use difun::generators::{
    audit_necessary_elements, build_ideal_generators, decompose, factorization_kernel_lemma_check,
    lambda_rel, minimal_generators_of_dn, phi_rel, rank_formula, rho_rel, sigma_k,
};
use difun::relations::BinaryRelation;
use difun::semigroup::{
    brute_force_rank, brute_force_relative_rank, closure, enumerate_ideal, enumerate_j_class,
    green_leq, principal_factor, search_min_subset, ElementSet, Green, GreenOracle, RankSearch,
};
use difun::{BigCount, DifunRelation};
use difun_cli::tables::{cmd_tables, fixtures, parse_csv, Format};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Verdict);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

/// Stirling numbers of the second kind by the triangle recurrence.
fn stirling_oracle(max_n: usize) -> Vec<Vec<BigCount>> {
    let mut s = vec![vec![big(0); max_n + 2]; max_n + 1];
    s[0][0] = big(1);
    for n in 1..=max_n {
        for k in 1..=n {
            s[n][k] = BigCount::from(k) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    s
}

/// Bell numbers by the Bell triangle.
fn bell_oracle(max_n: usize) -> Vec<BigCount> {
    let mut out = vec![big(1)];
    let mut row = vec![big(1)];
    for _ in 0..max_n {
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let x = next.last().unwrap() + v;
            next.push(x);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

/// Definitional difunctionality: distinct nonempty rows are disjoint.
fn rows_oracle(rel: &BinaryRelation) -> bool {
    let rows: Vec<u16> = rel.rows().iter().copied().filter(|&r| r != 0).collect();
    rows.iter()
        .all(|&a| rows.iter().all(|&b| a == b || a & b == 0))
}

fn generates(gens: &[DifunRelation], n: usize, target: &ElementSet) -> bool {
    if gens.is_empty() {
        return target.is_empty();
    }
    let set = ElementSet::from_elements(n, gens.iter().copied()).unwrap();
    closure(&set).unwrap().elements() == target
}

fn as_usize(v: &BigCount) -> usize {
    v.to_string().parse().unwrap()
}

fn criterion_1() -> Verdict {
    let fx = fixtures().map_err(|e| e.to_string())?;
    let csv = cmd_tables(13, Format::Csv).map_err(|e| e.to_string())?;
    let (ideal, full) = parse_csv(&csv).map_err(|e| e.to_string())?;
    let mut entries = 0;
    for (n, row) in fx.ideal.iter().enumerate() {
        ensure(
            &ideal[n] == row,
            format!("rank(I_r) row {n}: {:?} vs {:?}", ideal[n], row),
        )?;
        entries += row.len();
    }
    for (n, v) in fx.full.iter().enumerate() {
        ensure(&full[n] == v, format!("rank(D_{n}) = {} vs {v}", full[n]))?;
    }
    ensure(
        ideal[5] == [1u64, 31, 92, 84, 60, 57].map(big).to_vec(),
        "row 5 literal",
    )?;
    ensure(
        full[13] == big(27644450) && full[2] == big(3),
        "rank(D_13), rank(D_2) literals",
    )?;
    Ok(format!(
        "{entries} rank(I_r) entries (n ≤ 10) and {} rank(D_n) values (n ≤ 13) equal",
        fx.full.len()
    ))
}

fn criterion_2() -> Verdict {
    let bells = bell_oracle(20);
    for n in 3..=20 {
        let rank = rank_formula(n, n).map_err(|e| e.to_string())?.rank_formula;
        ensure(
            rank == &bells[n] + n,
            format!("n = {n}: {rank} vs B(n) + n"),
        )?;
    }
    Ok("rank(D_n) = B(n) + n for 3 ≤ n ≤ 20".into())
}

fn criterion_3() -> Verdict {
    let mut filtered = 0;
    for rel in BinaryRelation::all(2).unwrap() {
        ensure(
            rel.is_difunctional() == rows_oracle(&rel),
            format!("{rel:?}"),
        )?;
        filtered += rel.is_difunctional() as usize;
    }
    ensure(filtered == 12, format!("|D_2| = {filtered}"))?;
    let d2 = enumerate_ideal(2, 2).unwrap();
    ensure(d2.len() == 12, "structural |D_2|")?;
    let rank_d2 = brute_force_rank(&d2, &d2, 12).unwrap();
    ensure(rank_d2 == Some(3), format!("rank(D_2) = {rank_d2:?}"))?;
    let i1 = enumerate_ideal(2, 1).unwrap();
    let rank_i1 = brute_force_rank(&i1, &i1, i1.len()).unwrap();
    let table = fixtures().unwrap().ideal[2][1].clone();
    ensure(
        rank_i1.map(BigCount::from) == Some(table.clone()),
        format!("rank(I_1) = {rank_i1:?} vs {table}"),
    )?;

    let mut parts = Vec::new();
    for r in 1..=2 {
        let pf = principal_factor(2, r).unwrap();
        let pool = pf.j_class().to_vec();
        let opts = RankSearch::new(pool.len());
        let cover = search_min_subset(&pool, &opts, |a| pf.covers_j_class(a))
            .unwrap()
            .map(|w| w.len());
        let full_pf = search_min_subset(&pool, &opts, |a| pf.is_generated_by(a))
            .unwrap()
            .map(|w| w.len());
        let ideal = enumerate_ideal(2, r).unwrap();
        let j = enumerate_j_class(2, r).unwrap();
        let lower = enumerate_ideal(2, r - 1).unwrap();
        let relative = brute_force_relative_rank(&ideal, &j, &lower, lower.len()).unwrap();
        let total = brute_force_rank(&ideal, &ideal, ideal.len()).unwrap();
        let sum = cover.zip(relative).map(|(a, b)| a + b);
        ensure(
            sum.is_some() && sum == total,
            format!("r = {r}: {cover:?} + {relative:?} vs {total:?}"),
        )?;
        let brandt = as_usize(&rank_formula(2, r).unwrap().brandt_rank);
        ensure(
            cover == Some(brandt),
            format!("r = {r}: J-part {cover:?} vs formula {brandt}"),
        )?;
        if r < 2 {
            ensure(full_pf == cover, format!("rank(J_1*) = {full_pf:?}"))?;
        } else {
            ensure(full_pf.is_none(), "J_2* cannot reach zero from J_2")?;
        }
        parts.push(format!(
            "r={r}: {} + {} = {}",
            cover.unwrap(),
            relative.unwrap(),
            total.unwrap()
        ));
    }
    Ok(format!(
        "|D_2| = 12, rank(D_2) = 3, rank(I_1) = 3; additivity {} (r = 2 uses the J_2-covering rank since J_2 = S_2 never yields zero)",
        parts.join(", ")
    ))
}

fn criterion_4() -> Verdict {
    let filtered = BinaryRelation::all(3)
        .unwrap()
        .filter(|r| r.is_difunctional())
        .count();
    ensure(filtered == 128, format!("|D_3| = {filtered}"))?;
    for r in 1..=3 {
        let gens = build_ideal_generators(3, r).unwrap();
        let ideal = enumerate_ideal(3, r).unwrap();
        ensure(
            closure(&gens).unwrap().elements() == &ideal,
            format!("closure at r = {r}"),
        )?;
    }
    let upper = build_ideal_generators(3, 3).unwrap().len();
    let d3 = enumerate_ideal(3, 3).unwrap();

    let transposition = DifunRelation::permutation(3, &[2, 1, 3]).unwrap();
    let cycle = DifunRelation::permutation(3, &[2, 3, 1]).unwrap();
    let mut curated = vec![transposition, cycle];
    curated.extend(sigma_k(3, 1).unwrap().iter().copied());
    curated.extend(sigma_k(3, 2).unwrap().iter().copied());
    ensure(curated.len() == 8, "curated set has 8 elements")?;
    let witnesses = curated.iter().filter(|e| e.rank() < 3).count();
    ensure(witnesses == 6, "6 λ/ρ/φ witnesses below the top class")?;
    ensure(generates(&curated, 3, &d3), "curated set generates D_3")?;
    let table = fixtures().unwrap().full[3].clone();
    ensure(table == big(8), "bundled rank(D_3)")?;
    let mine = minimal_generators_of_dn(3).unwrap();
    ensure(
        generates(&mine.to_vec(), 3, &d3) && mine.len() == 8,
        "library minimal set",
    )?;

    let pool = d3.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..1000 {
        let sub: Vec<_> = pool.choose_multiple(&mut rng, 7).copied().collect();
        ensure(
            !generates(&sub, 3, &d3),
            format!("random 7-subset #{i} generates D_3"),
        )?;
    }
    Ok(format!(
        "|D_3| = 128; closures equal I_1, I_2, I_3; rank(D_3) ≤ {upper}; curated 8-set generates all 128; 1000 random 7-subsets fail"
    ))
}

fn criterion_5() -> Verdict {
    let s = stirling_oracle(5);
    let fact = |r: usize| (1..=r as u64).product::<u64>();
    let mut expected = big(0);
    let d4 = enumerate_ideal(4, 4).unwrap();
    for r in 0..=4 {
        let q = BigCount::from(r + 1) * &s[4][r + 1] + &s[4][r];
        expected += &q * &q * fact(r);
        let j = enumerate_j_class(4, r).unwrap();
        let mut kernels: Vec<_> = j.iter().map(|e| *e.kernel()).collect();
        kernels.sort();
        kernels.dedup();
        ensure(
            BigCount::from(kernels.len()) == q,
            format!("R-classes of J_{r}: {} vs {q}", kernels.len()),
        )?;
        if r >= 1 {
            let gens = build_ideal_generators(4, r).unwrap();
            let ideal = enumerate_ideal(4, r).unwrap();
            ensure(
                closure(&gens).unwrap().elements() == &ideal,
                format!("closure at r = {r}"),
            )?;
        }
    }
    ensure(
        BigCount::from(d4.len()) == expected,
        format!("|D_4| = {} vs {expected}", d4.len()),
    )?;
    Ok(format!(
        "|D_4| = {expected}; R-class counts match; closures equal I_1..I_4"
    ))
}

struct Tally(Vec<(String, usize)>);

impl Tally {
    fn add(&mut self, name: &str, cases: usize) {
        self.0.push((name.to_string(), cases));
    }
}

fn criterion_6() -> Verdict {
    let mut tally = Tally(Vec::new());
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let samples = 100_000;
    let d: Vec<Vec<DifunRelation>> = (0..=4)
        .map(|n| enumerate_ideal(n, n).unwrap().to_vec())
        .collect();

    // associativity
    let mut cases = 0;
    for n in 0..=3 {
        for a in &d[n] {
            for b in &d[n] {
                let ab = a.mul(b);
                for c in &d[n] {
                    ensure(
                        ab.mul(c) == a.mul(&b.mul(c)),
                        format!("associativity {a} {b} {c}"),
                    )?;
                    cases += 1;
                }
            }
        }
    }
    for _ in 0..samples {
        let [a, b, c] = [0, 1, 2].map(|_| *d[4].choose(&mut rng).unwrap());
        ensure(
            a.mul(&b).mul(&c) == a.mul(&b.mul(&c)),
            format!("associativity {a} {b} {c}"),
        )?;
        cases += 1;
    }
    tally.add("associativity", cases);

    // ⋄ against ∘ on partial injections and against the definitional ⋄
    let mut cases = 0;
    let inj: Vec<Vec<DifunRelation>> = d
        .iter()
        .map(|s| {
            s.iter()
                .copied()
                .filter(|e| e.is_partial_injection())
                .collect()
        })
        .collect();
    let agree = |a: &DifunRelation, b: &DifunRelation| {
        let circ = a.expand_pairs().compose_circ(&b.expand_pairs()).unwrap();
        let dia = a.expand_pairs().diamond(&b.expand_pairs()).unwrap();
        a.mul(b).expand_pairs() == circ && dia == circ
    };
    for n in 0..=3 {
        for a in &inj[n] {
            for b in &inj[n] {
                ensure(agree(a, b), format!("⋄ vs ∘ {a} {b}"))?;
                cases += 1;
            }
        }
    }
    for _ in 0..samples {
        let a = inj[4].choose(&mut rng).unwrap();
        let b = inj[4].choose(&mut rng).unwrap();
        ensure(agree(a, b), format!("⋄ vs ∘ {a} {b}"))?;
        cases += 1;
    }
    tally.add("diamond-vs-composition", cases);

    // inverse-semigroup laws
    let mut cases = 0;
    for n in 0..=4 {
        let z = DifunRelation::empty(n).unwrap();
        for a in &d[n] {
            let inv = a.inverse();
            ensure(
                a.mul(&inv).mul(a) == *a && inv.mul(a).mul(&inv) == inv,
                format!("inverse law {a}"),
            )?;
            ensure(z.mul(a) == z && a.mul(&z) == z, format!("zero {a}"))?;
            cases += 1;
        }
    }
    for _ in 0..samples {
        let a = *d[4].choose(&mut rng).unwrap();
        let b = *d[4].choose(&mut rng).unwrap();
        ensure(
            a.mul(&b).inverse() == b.inverse().mul(&a.inverse()),
            format!("(ab)⁻¹ {a} {b}"),
        )?;
        let (e, f) = (a.mul(&a.inverse()), b.mul(&b.inverse()));
        ensure(
            e.mul(&f) == f.mul(&e),
            format!("idempotents commute {e} {f}"),
        )?;
        cases += 1;
    }
    tally.add("inverse-laws", cases);

    // Green's relations, structural against S¹-translates
    let mut cases = 0;
    for n in 1..=3 {
        let all = ElementSet::from_elements(n, d[n].iter().copied()).unwrap();
        let oracle = GreenOracle::new(&all);
        for b in &d[n] {
            let right = oracle.right_ideal(b, true);
            let left = oracle.left_ideal(b, true);
            for a in &d[n] {
                ensure(
                    green_leq(a, b, Green::R).unwrap() == right.contains(a),
                    format!("≤_R {a} {b}"),
                )?;
                ensure(
                    green_leq(a, b, Green::L).unwrap() == left.contains(a),
                    format!("≤_L {a} {b}"),
                )?;
                cases += 1;
            }
        }
    }
    let oracle = GreenOracle::new(&minimal_generators_of_dn(4).unwrap());
    let mut cache = HashMap::new();
    let targets: Vec<_> = d[4].choose_multiple(&mut rng, 50).copied().collect();
    for i in 0..samples {
        let b = targets[i % targets.len()];
        let (right, left) = cache
            .entry(b)
            .or_insert_with(|| (oracle.right_ideal(&b, true), oracle.left_ideal(&b, true)));
        let a = d[4].choose(&mut rng).unwrap();
        ensure(
            green_leq(a, &b, Green::R).unwrap() == right.contains(a),
            format!("≤_R {a} {b}"),
        )?;
        ensure(
            green_leq(a, &b, Green::L).unwrap() == left.contains(a),
            format!("≤_L {a} {b}"),
        )?;
        cases += 1;
    }
    tally.add("green-relations", cases);

    // decomposition through L_r and R_r
    let mut cases = 0;
    for n in 1..=4 {
        for r in 1..=n {
            for a in &enumerate_ideal(n, r - 1).unwrap() {
                let dec = decompose(a, r).unwrap();
                ensure(
                    dec.reassemble() == *a && dec.gamma.rank() == a.rank(),
                    format!("decompose {a} r = {r}"),
                )?;
                cases += 1;
            }
        }
    }
    tally.add("decomposition", cases);

    // factorization conclusions on closure witnesses and on products
    let mut cases = 0;
    for n in 2..=4 {
        for r in 1..=n {
            let gens = build_ideal_generators(n, r).unwrap();
            let c = closure(&gens).unwrap();
            for (i, a) in c.elements().iter().enumerate() {
                let w = c.witness_at(i);
                if w.len() < 2 {
                    continue;
                }
                let b = c.evaluate(&w[..w.len() - 1]).unwrap();
                let g = *gens.get(w[w.len() - 1]).unwrap();
                ensure(
                    b.mul(&g) == *a && factorization_kernel_lemma_check(a, &b, &g),
                    format!("factorization {a} = {b} ⋄ {g}"),
                )?;
                cases += 1;
            }
        }
    }
    for b in &d[3] {
        for c in &d[3] {
            ensure(
                factorization_kernel_lemma_check(&b.mul(c), b, c),
                format!("factorization {b} ⋄ {c}"),
            )?;
            cases += 1;
        }
    }
    for _ in 0..samples {
        let b = d[4].choose(&mut rng).unwrap();
        let c = d[4].choose(&mut rng).unwrap();
        ensure(
            factorization_kernel_lemma_check(&b.mul(c), b, c),
            format!("factorization {b} ⋄ {c}"),
        )?;
        cases += 1;
    }
    tally.add("factorizations", cases);

    // Σ-chain identities
    let mut cases = 0;
    for n in 1..=5 {
        for k in 1..n {
            let parts = difun::combinatorics::full_partitions(n, k).unwrap();
            let p = parts.len();
            let phis: Vec<_> = (0..p - 1)
                .map(|i| phi_rel(&parts[i], &parts[i + 1]).unwrap())
                .collect();
            let last = lambda_rel(&parts[p - 1]).unwrap();
            let first = rho_rel(&parts[0]).unwrap();
            for l in 0..p {
                let lam = phis[l..].iter().rev().fold(last, |acc, f| f.mul(&acc));
                let rho = phis[..l].iter().fold(first, |acc, f| acc.mul(f));
                ensure(
                    lam == lambda_rel(&parts[l]).unwrap(),
                    format!("λ chain n={n} k={k} l={l}"),
                )?;
                ensure(
                    rho == rho_rel(&parts[l]).unwrap(),
                    format!("ρ chain n={n} k={k} l={l}"),
                )?;
                cases += 1;
            }
        }
    }
    tally.add("sigma-chains", cases);

    // necessary-element audit on found generating and non-generating sets
    let mut cases = 0;
    let mut found_generating = 0;
    let mut found_missing = 0;
    let mut audit = |n: usize,
                     r: usize,
                     sub: &[DifunRelation],
                     j: &ElementSet,
                     target: &ElementSet|
     -> Result<(), String> {
        let cand = ElementSet::from_elements(n, sub.iter().copied()).unwrap();
        let v = audit_necessary_elements(n, r, &cand).unwrap();
        let mut gens = j.to_vec();
        gens.extend_from_slice(sub);
        let gen = generates(&gens, n, target);
        if gen {
            found_generating += 1;
            ensure(
                v.passes,
                format!("audit rejects a generating set n={n} r={r}"),
            )?;
        }
        if !v.missing_kernels.is_empty() {
            found_missing += 1;
            ensure(
                !gen && !v.passes,
                format!("audit passes a set missing a kernel n={n} r={r}"),
            )?;
        }
        cases += 1;
        Ok(())
    };
    for r in 1..=2 {
        let j = enumerate_j_class(2, r).unwrap();
        let target = enumerate_ideal(2, r).unwrap();
        let lower = enumerate_ideal(2, r - 1).unwrap().to_vec();
        for mask in 0u32..(1 << lower.len()) {
            let sub: Vec<_> = (0..lower.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| lower[i])
                .collect();
            audit(2, r, &sub, &j, &target)?;
        }
    }
    for r in 2..=3 {
        let j = enumerate_j_class(3, r).unwrap();
        let target = enumerate_ideal(3, r).unwrap();
        let lower = enumerate_ideal(3, r - 1).unwrap().to_vec();
        let sigma: Vec<_> = (1..r)
            .flat_map(|k| sigma_k(3, k).unwrap().to_vec())
            .collect();
        for _ in 0..500 {
            let size = rng.gen_range(0..=2 * sigma.len());
            let mut sub: Vec<_> = lower.choose_multiple(&mut rng, size).copied().collect();
            if rng.gen_bool(0.5) {
                sub.extend(sigma.iter().copied());
            }
            audit(3, r, &sub, &j, &target)?;
        }
    }
    ensure(
        found_generating > 0 && found_missing > 0,
        "audit sweep found both kinds of set",
    )?;
    tally.add("necessary-elements", cases);

    let summary: Vec<String> = tally.0.iter().map(|(k, v)| format!("{k} {v}")).collect();
    Ok(format!("0 violations; cases: {}", summary.join(", ")))
}

fn criterion_7() -> Verdict {
    let fx = oeis_fixtures();
    let s = stirling_oracle(16);
    let b = bell_oracle(15);
    for n in 1..=15 {
        for k in 1..=n {
            ensure(
                stirling2(n, k) == fx.stirling_rows[n - 1][k - 1],
                format!("S({n},{k})"),
            )?;
            ensure(stirling2(n, k) == s[n][k], format!("S({n},{k}) recurrence"))?;
        }
    }
    for n in 0..=15 {
        ensure(bell(n) == fx.bell[n] && bell(n) == b[n], format!("B({n})"))?;
    }
    Ok("S(n,k) matches A008277 and B(n) matches A000110 for n ≤ 15".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("table reproduction", Duration::from_secs(1), criterion_1),
        ("rank(D_n) = B(n) + n", Duration::from_secs(1), criterion_2),
        (
            "exhaustive ground truth at n = 2",
            Duration::from_secs(10),
            criterion_3,
        ),
        (
            "closure verification at n = 3",
            Duration::from_secs(60),
            criterion_4,
        ),
        (
            "closure verification at n = 4",
            Duration::from_secs(300),
            criterion_5,
        ),
        ("property suites", Duration::MAX, criterion_6),
        ("OEIS fixture agreement", Duration::MAX, criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let limit_text = if *limit == Duration::MAX {
            "no limit".to_string()
        } else {
            format!("limit {}s", limit.as_secs())
        };
        let verdict = match verdict {
            Ok(msg) if elapsed > *limit => Err(format!("too slow: {msg}")),
            v => v,
        };
        match verdict {
            Ok(msg) => println!(
                "PASS criterion {} ({name}) [{elapsed:.2?}, {limit_text}]: {msg}",
                i + 1
            ),
            Err(msg) => {
                failed += 1;
                println!(
                    "FAIL criterion {} ({name}) [{elapsed:.2?}, {limit_text}]: {msg}",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
