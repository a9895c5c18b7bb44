use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{orient_between, pad, ConstructionError};
use crate::diagram::{random_braid, random_tangle, Axis, Closure, Event, Sign, SliceWord, TangleDiagram};
use crate::tl::{annulus_reduce, tl_from_tangle, AnnulusClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    /// A 3-tangle, changed by rewriting.
    Tangle(TangleDiagram),
    /// A 2-tangle on strands `at, at + 1`, left alone by rewriting.
    Fixed { tangle: TangleDiagram, at: usize },
}

impl Letter {
    fn ambient(&self, flags: Option<&[bool]>) -> Result<TangleDiagram, ConstructionError> {
        match self {
            Letter::Tangle(t) => Ok(t.clone()),
            Letter::Fixed { tangle, at } => pad(tangle, *at, flags, 3),
        }
    }
}

/// Per-letter action on the 3-tangles of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// Rotation about the axis perpendicular to the plane.
    Rz,
    /// Top-bottom flip (rotation about the horizontal in-plane axis).
    Ry,
    /// `Rz`, then reversed orientation.
    ORz,
    /// `Ry`, then reversed orientation.
    ORy,
}

impl Rewrite {
    pub fn apply(self, t: &TangleDiagram) -> Result<TangleDiagram, ConstructionError> {
        let r = match self {
            Rewrite::Rz | Rewrite::ORz => t.rotate(Axis::Z)?,
            Rewrite::Ry | Rewrite::ORy => t.rotate(Axis::X)?,
        };
        Ok(if matches!(self, Rewrite::ORz | Rewrite::ORy) { r.reverse_orientation() } else { r })
    }

    pub fn parse(s: &str) -> Option<Rewrite> {
        match s {
            "rz" => Some(Rewrite::Rz),
            "ry" => Some(Rewrite::Ry),
            "orz" => Some(Rewrite::ORz),
            "ory" => Some(Rewrite::ORy),
            _ => None,
        }
    }
}

/// A cyclic word of tangles in a 3-strand annulus, cut open at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, ConstructionError> {
        if letters.is_empty() {
            return Err(ConstructionError::Arity("empty word".into()));
        }
        let oriented = letters.iter().map(|l| match l {
            Letter::Tangle(t) | Letter::Fixed { tangle: t, .. } => t.is_oriented(),
        });
        let mut kinds: Vec<bool> = oriented.collect();
        kinds.dedup();
        if kinds.len() > 1 {
            return Err(ConstructionError::Orientation("letters disagree on being oriented".into()));
        }
        for l in &letters {
            match l {
                Letter::Tangle(t) if t.width_in() != 3 || t.width_out() != 3 => {
                    return Err(ConstructionError::Arity("3-tangle letter must be 3 -> 3".into()));
                }
                Letter::Fixed { tangle, at } if tangle.width_in() != 2 || tangle.width_out() != 2 || *at > 1 => {
                    return Err(ConstructionError::Arity("2-tangle letter must be 2 -> 2 at position 0 or 1".into()));
                }
                _ => {}
            }
        }
        let w = CyclicWord { letters };
        let p = w.product()?;
        if p.is_oriented() && p.top_flags().as_deref() != p.bottom_flags() {
            return Err(ConstructionError::Orientation("word does not close up".into()));
        }
        Ok(w)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The letters stacked bottom to top.
    pub fn product(&self) -> Result<TangleDiagram, ConstructionError> {
        let start = self.letters.iter().find_map(|l| match l {
            Letter::Tangle(t) => Some(t.bottom_flags().map(<[bool]>::to_vec)),
            Letter::Fixed { .. } => None,
        });
        let flags = match start {
            Some(f) => f,
            None => return Err(ConstructionError::Arity("word has no 3-tangle letter".into())),
        };
        let mut acc = TangleDiagram::identity(3, flags)?;
        for l in &self.letters {
            let top = acc.top_flags();
            let next = l.ambient(top.as_deref()).map_err(|_| ConstructionError::Orientation("neighbouring letters cannot be glued".into()))?;
            acc = acc.compose(&next).map_err(|_| ConstructionError::Orientation("neighbouring letters cannot be glued".into()))?;
        }
        Ok(acc)
    }

    /// Closure in the annulus, read in the bracket skein module.
    pub fn annulus_class(&self) -> Result<AnnulusClass, ConstructionError> {
        Ok(annulus_reduce(&tl_from_tangle(&self.product()?)?))
    }

    /// The trace closure after `k` extra full twists of the three strands.
    pub fn closure(&self, k: i32) -> Result<TangleDiagram, ConstructionError> {
        let p = self.product()?;
        let twisted = p.compose(&full_twist(p.top_flags().as_deref(), k)?)?;
        Ok(twisted.closure(&Closure::Trace)?)
    }
}

/// `(σ1 σ2)^(3k)` on three strands, drawn with the given directions.
pub fn full_twist(flags: Option<&[bool]>, k: i32) -> Result<TangleDiagram, ConstructionError> {
    let sign = if k >= 0 { Sign::Pos } else { Sign::Neg };
    let events: Vec<Event> = (0..3 * k.unsigned_abs()).flat_map(|_| [Event::Cross(0, sign), Event::Cross(1, sign)]).collect();
    Ok(TangleDiagram::new(SliceWord::new(3, events)?, flags.map(<[bool]>::to_vec))?)
}

/// Applies `action` to every 3-tangle letter. Under `Rz` and `ORz` the
/// 2-tangles also move to the other pair of strands.
pub fn rewrite_cyclic_word(w: &CyclicWord, action: Rewrite) -> Result<CyclicWord, ConstructionError> {
    let flip = matches!(action, Rewrite::Rz | Rewrite::ORz);
    let letters = w
        .letters
        .iter()
        .map(|l| {
            Ok(match l {
                Letter::Tangle(t) => Letter::Tangle(action.apply(t)?),
                Letter::Fixed { tangle, at } => Letter::Fixed { tangle: tangle.clone(), at: if flip { 1 - at } else { *at } },
            })
        })
        .collect::<Result<Vec<_>, ConstructionError>>()?;
    CyclicWord::new(letters)
}

fn spread(rng: &mut ChaCha8Rng, len: usize) -> Vec<bool> {
    let mut is_l: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.5)).collect();
    let i = rng.gen_range(0..len);
    is_l[i] = true;
    is_l
}

/// A seeded unoriented word: one random 3-tangle `L` repeated, and fresh
/// random 2-tangles at position `at`.
pub fn random_tl_word(seed: u64, len: usize, at: usize, l_events: usize, t_events: usize) -> Result<CyclicWord, ConstructionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = random_tangle(rng.gen(), 3, l_events, false);
    let letters = spread(&mut rng, len)
        .into_iter()
        .map(|is_l| if is_l { Letter::Tangle(l.clone()) } else { Letter::Fixed { tangle: random_tangle(rng.gen(), 2, t_events, false), at } })
        .collect();
    CyclicWord::new(letters)
}

/// A seeded oriented word: `L` with directions `flags` at both ends (an
/// upward braid when every flag is up) and fresh oriented 2-tangles at `at`.
pub fn random_braid_word(seed: u64, len: usize, at: usize, flags: [bool; 3], l_crossings: usize, t_events: usize) -> Result<CyclicWord, ConstructionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = symmetric_tangle(&mut rng, flags, l_crossings);
    let fl = &flags[at..at + 2];
    let letters = spread(&mut rng, len)
        .into_iter()
        .map(|is_l| {
            if is_l {
                Letter::Tangle(l.clone())
            } else {
                let t = loop {
                    if let Some(t) = orient_between(&random_tangle(rng.gen(), 2, t_events, false), fl, fl) {
                        break t;
                    }
                };
                Letter::Fixed { tangle: t, at }
            }
        })
        .collect();
    CyclicWord::new(letters)
}

/// A seeded word in two 3-tangles `X`, `Y`, both with directions `flags` at
/// both ends.
pub fn random_xy_word(seed: u64, len: usize, flags: [bool; 3], events: usize) -> Result<CyclicWord, ConstructionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = symmetric_tangle(&mut rng, flags, events);
    let y = symmetric_tangle(&mut rng, flags, events);
    let letters = spread(&mut rng, len).into_iter().map(|is_x| Letter::Tangle(if is_x { x.clone() } else { y.clone() })).collect();
    CyclicWord::new(letters)
}

fn symmetric_tangle(rng: &mut ChaCha8Rng, flags: [bool; 3], events: usize) -> TangleDiagram {
    if flags.iter().all(|&f| f) {
        return random_braid(rng.gen(), 3, events);
    }
    loop {
        if let Some(t) = orient_between(&random_tangle(rng.gen(), 3, events, false), &flags, &flags) {
            break t;
        }
    }
}
