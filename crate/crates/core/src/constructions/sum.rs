use super::{pad, ConstructionError};
use crate::diagram::{Axis, Event, TangleDiagram};

/// Cuts a closed diagram open at its last cap into a 1-1 tangle whose single
/// strand runs through the component of that cap.
pub fn open_up(d: &TangleDiagram) -> Result<TangleDiagram, ConstructionError> {
    if !d.is_closed() || d.events().is_empty() {
        return Err(ConstructionError::Arity("need a nonempty closed diagram".into()));
    }
    let d = d.materialize_twists();
    let n = d.events().len();
    let open = d.restrict(0..n - 1, 0, 0)?;
    let through = open.top_flags().map(|f| vec![f[1]]);
    let strand = TangleDiagram::identity(1, through.clone())?;
    let cap = TangleDiagram::new(crate::diagram::SliceWord::new(3, vec![Event::Cap(0)])?, through.map(|f| vec![f[0], !f[0], f[0]]))?;
    Ok(strand.tensor(&open).compose(&cap)?)
}

fn component_at(d: &TangleDiagram, level: usize, pos: usize) -> usize {
    d.components().0[level][pos]
}

fn insert(l1: &TangleDiagram, c1: usize, t: &TangleDiagram) -> Result<TangleDiagram, ConstructionError> {
    let (seg, kinds) = l1.components();
    if c1 >= kinds.len() {
        return Err(ConstructionError::Component(format!("no component {c1} (link has {})", kinds.len())));
    }
    let (level, pos) = seg
        .iter()
        .enumerate()
        .find_map(|(lv, row)| row.iter().position(|&c| c == c1).map(|p| (lv, p)))
        .ok_or_else(|| ConstructionError::Component(format!("component {c1} has no strand")))?;
    let n = l1.events().len();
    let lower = l1.restrict(0..level, 0, 0)?;
    let upper = l1.restrict(level..n, 0, 0)?;
    let flags = lower.top_flags();
    let mut t = t.clone();
    if let (Some(f), Some(g)) = (&flags, t.bottom_flags()) {
        if f[pos] != g[0] {
            t = t.rotate(Axis::X)?;
        }
    }
    let mid = pad(&t, pos, flags.as_deref(), seg[level].len())?;
    Ok(lower.compose(&mid)?.compose(&upper)?)
}

/// `L1 # L2` and `L1 # -L2`, summed along component `c1` of `l1` and
/// component `c2` of `l2`.
pub fn connected_sum_pair(l1: &TangleDiagram, c1: usize, l2: &TangleDiagram, c2: usize) -> Result<(TangleDiagram, TangleDiagram), ConstructionError> {
    if !l1.is_oriented() || !l2.is_oriented() || !l1.is_closed() || !l2.is_closed() {
        return Err(ConstructionError::Orientation("connected sums need closed oriented diagrams".into()));
    }
    let l1 = l1.materialize_twists();
    let l2 = l2.materialize_twists();
    let count = l2.component_count();
    if c2 >= count {
        return Err(ConstructionError::Component(format!("no component {c2} (link has {count})")));
    }
    let n = l2.events().len();
    let l2 = if component_at(&l2, n - 1, 0) == c2 {
        l2
    } else if component_at(&l2, 1, 0) == c2 {
        l2.rotate(Axis::Z)?
    } else {
        return Err(ConstructionError::Component(format!("component {c2} must pass through the first cup or the last cap")));
    };
    let a = insert(&l1, c1, &open_up(&l2)?)?;
    let b = insert(&l1, c1, &open_up(&l2.reverse_orientation())?)?;
    Ok((a, b))
}
