mod common;

use common::{free_reduce, normal_position_word};
use heegaard_core::handlebody::{
    boundary_word, bounds_disk, enumerate_essential_curves, Color, CurveCap, HeegaardDiagram,
};
use heegaard_core::surface::{CurveClass, Slope};

fn exponent_sums(word: &[(usize, i8)], genus: usize) -> Vec<i64> {
    let mut sums = vec![0i64; genus];
    for &(g, s) in word {
        sums[g] += s as i64;
    }
    sums.into_iter().map(|x| x.abs()).collect()
}

fn check_against_oracle(diagram: &HeegaardDiagram, curves: &[CurveClass]) {
    let g = diagram.genus() as usize;
    for color in [Color::Red, Color::Blue] {
        let cut = diagram.side(color);
        let cut_coords: Vec<Vec<u32>> = cut.curves().iter().map(|k| k.coords().to_vec()).collect();
        for c in curves {
            let ours: Vec<(usize, i8)> = boundary_word(c, cut)
                .unwrap()
                .letters
                .iter()
                .map(|l| (l.generator, if l.inverse { -1 } else { 1 }))
                .collect();
            let theirs = normal_position_word(diagram.genus(), c.coords(), &cut_coords);
            let (ro, rt) = (free_reduce(&ours), free_reduce(&theirs));
            assert_eq!(ro.len(), rt.len(), "{c} against {color}: {ours:?} vs {theirs:?}");
            assert_eq!(exponent_sums(&ours, g), exponent_sums(&theirs, g), "{c} against {color}");
        }
    }
}

#[test]
fn genus_two_words_match_normal_position() {
    let diagram = HeegaardDiagram::standard(2).unwrap();
    let curves = enumerate_essential_curves(2, CurveCap::CoordinateSum(10), u64::MAX).unwrap();
    assert!(curves.len() > 20);
    check_against_oracle(&diagram, &curves);
}

#[test]
fn torus_words_match_normal_position() {
    let diagram = HeegaardDiagram::genus_one(Slope::new(1, 0).unwrap(), Slope::new(2, 7).unwrap()).unwrap();
    let curves = enumerate_essential_curves(1, CurveCap::SlopeBox(6), u64::MAX).unwrap();
    check_against_oracle(&diagram, &curves);
}

#[test]
fn genus_two_cut_curves_bound_disks() {
    let d = HeegaardDiagram::standard(2).unwrap();
    for color in [Color::Red, Color::Blue] {
        for c in d.side(color).curves() {
            assert!(bounds_disk(c, color, &d).unwrap());
            let other = d.side(color.opposite());
            assert_eq!(boundary_word(c, other).unwrap().reduced().len(), 1);
        }
    }
}
