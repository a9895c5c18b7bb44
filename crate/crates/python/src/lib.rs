use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ::skeinlab::constructions::{self as cons, SegmentOrientation, WordTheorem};
use ::skeinlab::diagram::{self, Axis, Closure, TangleDiagram};
use ::skeinlab::hecke::{self, HeckeElement, HeckeSpectral, SPrime3Element, SPrime3Spectral};
use ::skeinlab::invariants::{self, InvariantError, InvariantKind, SkeinConfig};
use ::skeinlab::poly::Vars;
use ::skeinlab::tl::{self, Spectral, SpectralAxis, TLElement};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn axis(s: &str) -> PyResult<Axis> {
    match s {
        "x" => Ok(Axis::X),
        "y" => Ok(Axis::Y),
        "z" => Ok(Axis::Z),
        _ => Err(PyValueError::new_err(format!("axis must be x, y or z, got {s:?}"))),
    }
}

fn kind(s: &str) -> PyResult<InvariantKind> {
    InvariantKind::parse(s).ok_or_else(|| PyValueError::new_err(format!("unknown invariant kind {s:?}")))
}

fn invariant_err(e: InvariantError) -> PyErr {
    match e {
        InvariantError::Budget(..) => PyRuntimeError::new_err(e.to_string()),
        e => err(e),
    }
}

/// A tangle diagram as a slice word with optional orientation.
#[pyclass(name = "Diagram", frozen, from_py_object)]
#[derive(Clone)]
struct PyDiagram(TangleDiagram);

#[pymethods]
impl PyDiagram {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        TangleDiagram::from_json(s).map(PyDiagram).map_err(err)
    }

    #[staticmethod]
    fn from_pd(code: Vec<[usize; 4]>) -> PyResult<Self> {
        diagram::from_pd(&code).map(PyDiagram).map_err(err)
    }

    /// Braid word with `i` for sigma_i and `-i` for its inverse, 1-based.
    #[staticmethod]
    fn from_braid(n: usize, word: Vec<i32>) -> PyResult<Self> {
        TangleDiagram::from_braid(n, &word).map(PyDiagram).map_err(err)
    }

    #[staticmethod]
    fn random(seed: u64, n: usize, events: usize, oriented: bool) -> Self {
        PyDiagram(diagram::random_tangle(seed, n, events, oriented))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn width_in(&self) -> usize {
        self.0.width_in()
    }

    #[getter]
    fn width_out(&self) -> usize {
        self.0.width_out()
    }

    #[getter]
    fn crossings(&self) -> usize {
        self.0.word().crossing_count()
    }

    #[getter]
    fn components(&self) -> usize {
        self.0.component_count()
    }

    #[getter]
    fn oriented(&self) -> bool {
        self.0.is_oriented()
    }

    fn is_closed(&self) -> bool {
        self.0.is_closed()
    }

    fn tait_number(&self) -> PyResult<i32> {
        self.0.tait_number().map_err(err)
    }

    fn compose(&self, top: &PyDiagram) -> PyResult<Self> {
        self.0.compose(&top.0).map(PyDiagram).map_err(err)
    }

    fn tensor(&self, right: &PyDiagram) -> Self {
        PyDiagram(self.0.tensor(&right.0))
    }

    fn rotate(&self, about: &str) -> PyResult<Self> {
        self.0.rotate(axis(about)?).map(PyDiagram).map_err(err)
    }

    fn mirror(&self) -> Self {
        PyDiagram(self.0.mirror())
    }

    fn reverse(&self) -> Self {
        PyDiagram(self.0.reverse_orientation())
    }

    fn closure(&self) -> PyResult<Self> {
        self.0.closure(&Closure::Trace).map(PyDiagram).map_err(err)
    }

    fn two_cable(&self) -> Self {
        PyDiagram(self.0.two_cable())
    }

    /// Canonical string of one invariant; raises RuntimeError past the cap.
    #[pyo3(signature = (kind_name, max_crossings = 24))]
    fn invariant(&self, kind_name: &str, max_crossings: usize) -> PyResult<String> {
        invariants::compute(&self.0, kind(kind_name)?, &SkeinConfig::with_cap(max_crossings)).map(|r| r.value.to_string()).map_err(invariant_err)
    }

    fn __repr__(&self) -> String {
        format!("Diagram({})", self.0.to_json())
    }

    fn __eq__(&self, other: &PyDiagram) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "MarkedLink", frozen)]
struct PyMarkedLink(cons::MarkedLink);

#[pymethods]
impl PyMarkedLink {
    #[new]
    fn new(below: &PyDiagram, inner: &PyDiagram, at: usize, above: &PyDiagram) -> PyResult<Self> {
        cons::MarkedLink::new(below.0.clone(), inner.0.clone(), at, above.0.clone()).map(PyMarkedLink).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (seed, inner_events = 5, outer_events = 8, oriented = true))]
    fn random(seed: u64, inner_events: usize, outer_events: usize, oriented: bool) -> Self {
        PyMarkedLink(cons::random_marked_link(seed, inner_events, outer_events, oriented))
    }

    fn link(&self) -> PyResult<PyDiagram> {
        self.0.link().map(PyDiagram).map_err(err)
    }

    fn inner(&self) -> PyDiagram {
        PyDiagram(self.0.inner().clone())
    }

    fn mutant(&self, about: &str) -> PyResult<PyDiagram> {
        self.0.mutant(axis(about)?).and_then(|m| m.link()).map(PyDiagram).map_err(err)
    }

    fn component_preserving(&self, about: &str) -> PyResult<bool> {
        self.0.component_preserving(axis(about)?).map_err(err)
    }
}

/// The rotant pair `(L, r(L))` of a rotor segment repeated `n` times.
#[pyfunction]
fn rotant_pair(segment: &PyDiagram, n: usize, stator: Vec<PyDiagram>) -> PyResult<(PyDiagram, PyDiagram)> {
    let rotor = cons::Rotor::new(segment.0.clone(), n).map_err(err)?;
    let stator = cons::Stator::new(stator.into_iter().map(|d| d.0).collect()).map_err(err)?;
    let (l, r) = cons::build_rotant_pair(&rotor, &stator).map_err(err)?;
    Ok((PyDiagram(l), PyDiagram(r)))
}

#[pyfunction]
#[pyo3(signature = (seed, n, arcs = 1))]
fn random_rotant_pair(seed: u64, n: usize, arcs: usize) -> PyResult<(PyDiagram, PyDiagram)> {
    let kind = SegmentOrientation::Oriented;
    let rotor = cons::random_rotor(seed, n, arcs, 3, kind).map_err(err)?;
    let stator = cons::random_stator(seed.wrapping_add(1), &rotor, 1, 2, kind).map_err(err)?;
    let (l, r) = cons::build_rotant_pair(&rotor, &stator).map_err(err)?;
    Ok((PyDiagram(l), PyDiagram(r)))
}

/// The connected sums `L1 # L2` and `L1 # -L2` along the given components.
#[pyfunction]
fn connected_sum_pair(l1: &PyDiagram, c1: usize, l2: &PyDiagram, c2: usize) -> PyResult<(PyDiagram, PyDiagram)> {
    let (a, b) = cons::connected_sum_pair(&l1.0, c1, &l2.0, c2).map_err(err)?;
    Ok((PyDiagram(a), PyDiagram(b)))
}

/// Compares two diagrams on the given invariants; returns the certificate JSON.
#[pyfunction]
#[pyo3(signature = (left, right, kinds, construction = "custom", theorem = "", max_crossings = 24))]
fn certify(left: &PyDiagram, right: &PyDiagram, kinds: Vec<String>, construction: &str, theorem: &str, max_crossings: usize) -> PyResult<String> {
    let kinds = kinds.iter().map(|k| kind(k)).collect::<PyResult<Vec<_>>>()?;
    let c = cons::certify(construction, theorem, (&left.0, &right.0), &kinds, &SkeinConfig::with_cap(max_crossings), None).map_err(|e| match e {
        cons::ConstructionError::Invariant(e) => invariant_err(e),
        e => err(e),
    })?;
    Ok(c.to_json())
}

fn parse_json(s: &str) -> PyResult<serde_json::Value> {
    serde_json::from_str(s).map_err(|e| PyValueError::new_err(format!("line {} column {}: {e}", e.line(), e.column())))
}

fn vars_or(names: Option<Vec<String>>, base: Vars) -> Vars {
    names.map(|n| Vars::new(&n)).unwrap_or(base)
}

/// Spectral-parameter tangle for a TL_3 or H_3 element given as JSON.
/// Returns `(P, P^-1)` as JSON strings, or None outside the dense set.
#[pyfunction]
#[pyo3(signature = (algebra, element, vars = None, about = "y"))]
fn spectral(algebra: &str, element: &str, vars: Option<Vec<String>>, about: &str) -> PyResult<Option<(String, String)>> {
    let v = parse_json(element)?;
    let pair = match algebra {
        "tl3" => {
            let l = TLElement::from_json_value(3, &vars_or(vars, Vars::a()), &v).map_err(err)?;
            let ax = if about == "z" { SpectralAxis::Z } else { SpectralAxis::Y };
            match tl::tl_spectral_p(&l, ax).map_err(err)? {
                Spectral::Found { p, p_inv } => Some((p.to_json_value(), p_inv.to_json_value())),
                Spectral::NotInDense => None,
            }
        }
        "h3" => {
            let l = HeckeElement::from_json_value(3, &vars_or(vars, Vars::vz()), &v).map_err(err)?;
            match hecke::hecke_spectral_p(&l).map_err(err)? {
                HeckeSpectral::Found { p, p_inv } => Some((p.to_json_value(), p_inv.to_json_value())),
                HeckeSpectral::NotInDense => None,
            }
        }
        _ => return Err(PyValueError::new_err("algebra must be tl3 or h3")),
    };
    Ok(pair.map(|(p, q)| (p.to_string(), q.to_string())))
}

/// `Y` with `XY = Y r_y(X)` and `BY = Y r_y(B)` in S'_3(3), elements given
/// as JSON lists of six coefficients.
#[pyfunction]
fn sprime3_spectral(x: &str, b: &str) -> PyResult<Option<(String, String)>> {
    let vars = Vars::vz();
    let x = SPrime3Element::from_json_value(&vars, &parse_json(x)?).map_err(err)?;
    let b = SPrime3Element::from_json_value(&vars, &parse_json(b)?).map_err(err)?;
    Ok(match hecke::sprime3_spectral(&x, &b).map_err(err)? {
        SPrime3Spectral::Found { y, y_inv } => Some((y.to_json_value().to_string(), y_inv.to_json_value().to_string())),
        SPrime3Spectral::NotInDense => None,
    })
}

/// Runs the seeded suite for a theorem label and returns its report as JSON.
#[pyfunction]
#[pyo3(signature = (theorem, seed, trials, n = None, max_crossings = 24))]
fn run_suite(theorem: &str, seed: u64, trials: usize, n: Option<usize>, max_crossings: usize) -> PyResult<String> {
    let cfg = SkeinConfig::with_cap(max_crossings);
    let need_n = || n.ok_or_else(|| PyValueError::new_err("this suite needs n"));
    let rep = match theorem {
        "1.1" => cons::mutation_suite(seed, trials, &cfg),
        "1.2" => cons::satellite_mutation_suite(seed, trials, 4, &cfg),
        "1.3" => cons::connected_sum_suite(seed, trials, 4, &cfg),
        "2.2" => {
            let n = need_n()?;
            let mut kinds = vec![InvariantKind::Bracket];
            if n <= 4 {
                kinds.push(InvariantKind::Homflypt);
            }
            cons::rotant_suite(seed, n, &kinds, trials, &cfg)
        }
        "2.3" => cons::traczyk_suite(seed, need_n()?, trials),
        other => match WordTheorem::parse(other) {
            Some(w) => cons::word_suite(w, seed, trials, &cfg),
            None => return Err(PyValueError::new_err(format!("unknown theorem {other:?}"))),
        },
    }
    .map_err(err)?;
    serde_json::to_string(&rep).map_err(err)
}

#[pymodule]
fn skeinlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyMarkedLink>()?;
    m.add_function(wrap_pyfunction!(rotant_pair, m)?)?;
    m.add_function(wrap_pyfunction!(random_rotant_pair, m)?)?;
    m.add_function(wrap_pyfunction!(connected_sum_pair, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(spectral, m)?)?;
    m.add_function(wrap_pyfunction!(sprime3_spectral, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
