//! Random surface automorphisms for property tests.
#![allow(dead_code)]

use torusfold::graph::parse_marked_map;
use torusfold::MarkedMap;

pub const TORUS_ID: &str = "vertices: v\nedge a v v\nedge b v v\nmap a = a\nmap b = b\nboundary = a ~b ~a b\n";
pub const GENUS2_ID: &str = "vertices: v\nedge a v v\nedge b v v\nedge c v v\nedge d v v\n\
map a = a\nmap b = b\nmap c = c\nmap d = d\nboundary = a ~b ~a b c ~d ~c d\n";
pub const EXAMPLE1: &str = include_str!("../../fixtures/example1.map");

/// Twists of the punctured torus, each fixing `a ~b ~a b`.
const TORUS_TWISTS: [[&str; 2]; 4] = [["a b", "b"], ["a", "b a"], ["a ~b", "b"], ["a", "b ~a"]];

/// Replaces the map of `id` edge by edge.
fn with_images(id: &str, images: &[(&str, &str)]) -> MarkedMap {
    let mut text = String::new();
    for line in id.lines() {
        let replaced = images
            .iter()
            .find(|(e, _)| line == format!("map {e} = {e}"))
            .map(|(e, img)| format!("map {e} = {img}"));
        text.push_str(&replaced.unwrap_or_else(|| line.to_string()));
        text.push('\n');
    }
    parse_marked_map(&text).unwrap()
}

pub fn torus_word(word: &[u8]) -> MarkedMap {
    let mut acc = parse_marked_map(TORUS_ID).unwrap();
    for &i in word {
        let [fa, fb] = TORUS_TWISTS[usize::from(i % 4)];
        acc = acc.then(&with_images(TORUS_ID, &[("a", fa), ("b", fb)])).unwrap();
    }
    acc
}

/// Words in handle twists of the genus two surface and the map of
/// `example1.map` (letter 8), which mixes the handles.
pub fn genus2_word(word: &[u8]) -> MarkedMap {
    let mut acc = parse_marked_map(GENUS2_ID).unwrap();
    for &i in word {
        let step = match i % 9 {
            8 => parse_marked_map(EXAMPLE1).unwrap(),
            j => {
                let [f1, f2] = TORUS_TWISTS[usize::from(j % 4)];
                if j < 4 {
                    with_images(GENUS2_ID, &[("a", f1), ("b", f2)])
                } else {
                    let (g1, g2) = (f1.replace('a', "c").replace('b', "d"), f2.replace('a', "c").replace('b', "d"));
                    with_images(GENUS2_ID, &[("c", &g1), ("d", &g2)])
                }
            }
        };
        acc = acc.then(&step).unwrap();
    }
    acc
}
