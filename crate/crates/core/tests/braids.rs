use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpb_core::braid::{bound_fhk, bound_kim, closed_components, fhk_code, BraidWord};
use fpb_core::census::{classify_code, fpbk_lookup, Fpbk};
use fpb_core::diagram::PlanarDiagram;
use fpb_core::invariants::{code_invariants, pd_invariants};
use fpb_core::reference::builtin_table;

fn random_braid(rng: &mut ChaCha8Rng, strands: usize, extra: usize) -> BraidWord {
    let mut prefix: Vec<i32> = (1..strands as i32).collect();
    for i in (1..prefix.len()).rev() {
        prefix.swap(i, rng.gen_range(0..=i));
    }
    let mut letters: Vec<i32> = prefix
        .into_iter()
        .map(|g| if rng.gen() { g } else { -g })
        .collect();
    for _ in 0..extra {
        let g = rng.gen_range(1..strands as i32);
        letters.push(if rng.gen() { g } else { -g });
    }
    BraidWord::new(strands, letters).unwrap()
}

#[test]
fn fhk_surface_bounds_the_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut knots = 0;
    while knots < 60 {
        let strands = rng.gen_range(2..=4);
        let extra = rng.gen_range(1..=4);
        let braid = random_braid(&mut rng, strands, extra);
        let code = fhk_code(&braid).unwrap();
        assert_eq!(code.component_count(), closed_components(&braid), "{braid}");
        if closed_components(&braid) != 1 || code.n() > 12 {
            continue;
        }
        knots += 1;
        let closure = pd_invariants(&PlanarDiagram::from_braid(&braid).unwrap(), 64).unwrap();
        let surface = code_invariants(&code, 64).unwrap();
        assert_eq!(
            surface.fingerprint(),
            closure.fingerprint(),
            "{braid} -> {code}"
        );
        assert_eq!(surface.jones, closure.jones, "{braid} -> {code}");
    }
}

#[test]
fn bounds_dominate_known_values() {
    let table = builtin_table().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut named = 0;
    for _ in 0..300 {
        let strands = rng.gen_range(2..=3);
        let k = strands as i32 - 1;
        let mut letters: Vec<i32> = (1..=k).rev().collect();
        for _ in 0..rng.gen_range(1..=4) {
            let g = rng.gen_range(1..=k);
            letters.push(if rng.gen() { g } else { -g });
        }
        let braid = BraidWord::new(strands, letters).unwrap();
        if closed_components(&braid) != 1 {
            continue;
        }
        let code = fhk_code(&braid).unwrap();
        let name = classify_code(&code, &table).unwrap();
        let Ok(Fpbk::Exact(v)) = fpbk_lookup(&name) else {
            continue;
        };
        named += 1;
        assert!(bound_fhk(&braid).unwrap() >= v as usize, "{braid} {name}");
        assert!(bound_kim(&braid) >= v as i64, "{braid} {name}");
    }
    assert!(named > 20);
}

#[test]
fn trefoil_word() {
    let table = builtin_table().unwrap();
    let braid = fpb_core::braid::parse_braid("1 1 1", 2).unwrap();
    let code = fhk_code(&braid).unwrap();
    assert_eq!(code.n(), 6);
    assert_eq!(classify_code(&code, &table).unwrap(), "3_1");
}
