#![allow(dead_code)]

use mvcrystal::words::{apply_move, move_applicable};
use mvcrystal::{Base, LusztigDatum, Move, ReducedWord, RootDatum};
use rand::Rng;

/// A reduced word of `w0` reached from the reference word by `steps`
/// random applicable braid moves.
pub fn random_word<R: Rng>(d: &RootDatum, rng: &mut R, steps: usize) -> ReducedWord {
    let mut w = ReducedWord(d.reference_word().to_vec());
    for _ in 0..steps {
        let moves: Vec<Move> = (0..w.len())
            .flat_map(|k| [Move::two(k), Move::three(k)])
            .filter(|&mv| move_applicable(d, w.letters(), mv))
            .collect();
        if moves.is_empty() {
            break;
        }
        w = apply_move(d, &w, moves[rng.random_range(0..moves.len())]).unwrap();
    }
    w
}

/// A random element of `B(inf)` on a random word, entries below `max`.
pub fn random_binf<R: Rng>(d: &RootDatum, rng: &mut R, max: i64) -> LusztigDatum {
    let word = random_word(d, rng, 20);
    let n = (0..word.len()).map(|_| rng.random_range(0..max)).collect();
    LusztigDatum::new(d, word, n, Base::Infinity).unwrap()
}
