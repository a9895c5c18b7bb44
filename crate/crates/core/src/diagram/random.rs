use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Event, Sign, SliceWord, TangleDiagram};

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// A random `n -> n` tangle with roughly `n_events` events, deterministic in
/// `seed`. The width never exceeds `n + 4`.
pub fn random_tangle(seed: u64, n: usize, n_events: usize, oriented: bool) -> TangleDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut flags: Vec<bool> = (0..n).map(|_| !oriented || rng.gen_bool(0.5)).collect();
    let mut orient = flags.clone();
    let mut events = Vec::with_capacity(n_events + n + 4);
    let cap_sites = |f: &[bool]| -> Vec<usize> { (0..f.len().saturating_sub(1)).filter(|&i| !oriented || f[i] != f[i + 1]).collect() };
    let push_cup = |rng: &mut ChaCha8Rng, flags: &mut Vec<bool>, orient: &mut Vec<bool>, events: &mut Vec<Event>| {
        let i = rng.gen_range(0..=flags.len());
        let f = !oriented || rng.gen_bool(0.5);
        flags.splice(i..i, [f, !f]);
        orient.push(f);
        events.push(Event::Cup(i));
    };
    for _ in 0..n_events {
        let w = flags.len();
        let r: f64 = rng.gen();
        let sites = cap_sites(&flags);
        if w >= 2 && r < 0.6 {
            let i = rng.gen_range(0..w - 1);
            flags.swap(i, i + 1);
            events.push(Event::Cross(i, sign(&mut rng)));
        } else if w < n + 4 && (r < 0.8 || sites.is_empty() || w <= n) {
            push_cup(&mut rng, &mut flags, &mut orient, &mut events);
        } else if !sites.is_empty() {
            let i = sites[rng.gen_range(0..sites.len())];
            flags.drain(i..i + 2);
            events.push(Event::Cap(i));
        }
    }
    while flags.len() > n {
        let sites = cap_sites(&flags);
        let i = sites[rng.gen_range(0..sites.len())];
        flags.drain(i..i + 2);
        events.push(Event::Cap(i));
    }
    while flags.len() < n {
        push_cup(&mut rng, &mut flags, &mut orient, &mut events);
    }
    let word = SliceWord::new(n, events).expect("generator keeps widths valid");
    TangleDiagram::new(word, oriented.then_some(orient)).expect("generator keeps orientation valid")
}

/// A random braid word on `n` strands as a diagram, all strands upward.
pub fn random_braid(seed: u64, n: usize, len: usize) -> TangleDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n < 2 {
        return TangleDiagram::identity(n, Some(vec![true; n])).expect("identity");
    }
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    TangleDiagram::from_braid(n, &word).expect("valid braid")
}
