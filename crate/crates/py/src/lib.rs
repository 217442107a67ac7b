//! Python bindings: the two family types plus the norm computations,
//! Hall machinery, bridges and the verification suites.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use normforge::bridges;
use normforge::coloring::{
    kgon_analysis, norm3 as coloring_norm3, splitting_number, Norm3Oracle, PolygonFamily,
};
use normforge::combinatorics;
use normforge::error::Error;
use normforge::exclusion::{norm1 as exclusion_norm1, ExclusionParams};
use normforge::hall::{
    self, delta, dset, hall_norm, hall_norm4, hn as hall_hn_value, FnFamily, FnSet, PartialFn,
};
use normforge::propcheck::{discrepancy_report, run_suite, suite_names, SuiteSpec};
use normforge::sets::{self, SubsetMask, Universe};
use normforge::subset_norm::{
    norm2 as subset_norm2, ratio_lower_bound, ratio_upper_bound, refutation_check, SubsetNormParams,
};

fn err(e: Error) -> PyErr {
    match e {
        Error::Budget(msg) => PyRuntimeError::new_err(format!("budget exceeded: {msg}")),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn mask_of(elements: &[u32]) -> SubsetMask {
    SubsetMask::from_elements(elements)
}

fn pfn_of(map: &BTreeMap<u32, u8>) -> PyResult<PartialFn> {
    let pairs: Vec<(u32, u8)> = map.iter().map(|(k, v)| (*k, *v)).collect();
    PartialFn::from_pairs(&pairs).map_err(err)
}

fn pfn_to_map(pfn: &PartialFn) -> BTreeMap<u32, u8> {
    pfn.domain()
        .elements()
        .into_iter()
        .map(|p| (p, u8::from(pfn.ones().contains(p))))
        .collect()
}

fn fnset_of(n: u32, functions: Vec<String>) -> PyResult<FnSet> {
    let mut members = Vec::with_capacity(functions.len());
    for s in &functions {
        if s.len() != n as usize || s.chars().any(|c| c != '0' && c != '1') {
            return Err(PyValueError::new_err(format!(
                "function {s:?} is not a 0/1 string of length {n}"
            )));
        }
        let mut ones = SubsetMask::EMPTY;
        for (i, c) in s.chars().enumerate() {
            if c == '1' {
                ones.insert(i as u32);
            }
        }
        members.push(ones);
    }
    FnSet::new(n, members).map_err(err)
}

fn fnset_to_strings(set: &FnSet) -> Vec<String> {
    set.members()
        .iter()
        .map(|m| hall::codec::fn_string(set.n(), *m))
        .collect()
}

/// A family of subsets of {0..universe-1}.
#[pyclass(name = "Family", skip_from_py_object)]
#[derive(Clone)]
struct PyFamily {
    inner: sets::Family,
}

#[pymethods]
impl PyFamily {
    #[new]
    fn new(universe: u32, sets_list: Vec<Vec<u32>>) -> PyResult<Self> {
        let u = Universe::new(universe).map_err(err)?;
        let members = sets_list.iter().map(|s| mask_of(s)).collect();
        Ok(PyFamily {
            inner: sets::Family::new(u, members).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyFamily {
            inner: sets::parse_family(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        sets::emit_family(&self.inner)
    }

    #[getter]
    fn universe(&self) -> u32 {
        self.inner.universe().size()
    }

    fn members(&self) -> Vec<Vec<u32>> {
        self.inner.members().iter().map(|m| m.elements()).collect()
    }

    fn counting_norm(&self) -> BigUint {
        self.inner.counting_norm().into_biguint()
    }

    fn restrict(&self, z: Vec<u32>) -> PyResult<Self> {
        Ok(PyFamily {
            inner: self.inner.restrict(mask_of(&z)).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Family(universe={}, members={})",
            self.inner.universe().size(),
            self.inner.len()
        )
    }
}

/// A set of total 0/1 functions on {0..n-1}, each written as a string
/// with index 0 leftmost.
#[pyclass(name = "FunctionSet", skip_from_py_object)]
#[derive(Clone)]
struct PyFunctionSet {
    inner: FnSet,
}

#[pymethods]
impl PyFunctionSet {
    #[new]
    fn new(n: u32, functions: Vec<String>) -> PyResult<Self> {
        Ok(PyFunctionSet {
            inner: fnset_of(n, functions)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyFunctionSet {
            inner: hall::codec::parse_fnset(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        hall::codec::emit_fnset(&self.inner)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    fn functions(&self) -> Vec<String> {
        fnset_to_strings(&self.inner)
    }

    fn hall_norm(&self) -> PyResult<u32> {
        Ok(hall_norm4(&self.inner).map_err(err)?.0)
    }

    fn delta(&self) -> PyResult<Vec<BTreeMap<u32, u8>>> {
        Ok(delta(&self.inner)
            .map_err(err)?
            .members()
            .iter()
            .map(pfn_to_map)
            .collect())
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("FunctionSet(n={}, members={})", self.inner.n(), self.inner.len())
    }
}

#[pyfunction]
fn binomial(n: u64, k: u64) -> BigUint {
    combinatorics::binomial(n, k).into_biguint()
}

#[pyfunction]
fn factorial_bounds(m: u64) -> PyResult<(f64, f64)> {
    combinatorics::factorial_bounds(m).map_err(err)
}

#[pyfunction]
fn norm0(universe: u32, sets_list: Vec<Vec<u32>>) -> PyResult<BigUint> {
    Ok(PyFamily::new(universe, sets_list)?.counting_norm())
}

/// Exclusion norm as an exact "p/q" string.
#[pyfunction]
fn norm1(f: u32, g: u32, set: Vec<u32>) -> PyResult<String> {
    let params = ExclusionParams::new(f, g).map_err(err)?;
    Ok(exclusion_norm1(&params, mask_of(&set)).map_err(err)?.render())
}

/// Subset norm and its minimal witness.
#[pyfunction]
fn norm2(n: u32, g: u32, sets_list: Vec<Vec<u32>>) -> PyResult<(u32, Vec<u32>)> {
    let params = SubsetNormParams::new(n, g).map_err(err)?;
    let family = PyFamily::new(g, sets_list)?.inner;
    let result = subset_norm2(&params, &family).map_err(err)?;
    Ok((result.norm, result.witness.elements()))
}

/// Graph coloring norm and a witnessing partition.
#[pyfunction]
fn norm3(universe: u32, sets_list: Vec<Vec<u32>>) -> PyResult<(u32, Vec<Vec<u32>>)> {
    let family =
        PolygonFamily::new(PyFamily::new(universe, sets_list)?.inner).map_err(err)?;
    let (value, witness) = coloring_norm3(&family).map_err(err)?;
    let parts = witness
        .partition
        .parts()
        .iter()
        .map(|p| p.elements())
        .collect();
    Ok((value, parts))
}

/// Least part count of a splitting partition.
#[pyfunction]
fn splitting(universe: u32, sets_list: Vec<Vec<u32>>) -> PyResult<(u32, Vec<Vec<u32>>)> {
    let family =
        PolygonFamily::new(PyFamily::new(universe, sets_list)?.inner).map_err(err)?;
    let (value, witness) = splitting_number(&family).map_err(err)?;
    let parts = witness
        .partition
        .parts()
        .iter()
        .map(|p| p.elements())
        .collect();
    Ok((value, parts))
}

/// The recursive-definition oracle for the coloring norm.
#[pyfunction]
fn norm3_recursive(universe: u32, sets_list: Vec<Vec<u32>>) -> PyResult<u32> {
    let u = Universe::new(universe).map_err(err)?;
    let family =
        PolygonFamily::new(PyFamily::new(universe, sets_list)?.inner).map_err(err)?;
    Norm3Oracle::new(u).map_err(err)?.norm(&family).map_err(err)
}

/// Hall norm of a set of total functions.
#[pyfunction]
fn norm4(n: u32, functions: Vec<String>) -> PyResult<u32> {
    Ok(hall_norm4(&fnset_of(n, functions)?).map_err(err)?.0)
}

#[pyfunction]
fn hall_hn(n: u32, pfns: Vec<BTreeMap<u32, u8>>) -> PyResult<u32> {
    let members = pfns.iter().map(pfn_of).collect::<PyResult<Vec<_>>>()?;
    hall_hn_value(&FnFamily::new(n, members).map_err(err)?).map_err(err)
}

#[pyfunction]
#[pyo3(name = "hall_HN")]
fn hall_hn_max(n: u32, pfns: Vec<BTreeMap<u32, u8>>) -> PyResult<(u32, Vec<BTreeMap<u32, u8>>)> {
    let members = pfns.iter().map(pfn_of).collect::<PyResult<Vec<_>>>()?;
    let (value, witness) = hall_norm(&FnFamily::new(n, members).map_err(err)?).map_err(err)?;
    Ok((
        value,
        witness.refined.members().iter().map(pfn_to_map).collect(),
    ))
}

#[pyfunction]
fn hall_delta(n: u32, functions: Vec<String>) -> PyResult<Vec<BTreeMap<u32, u8>>> {
    Ok(delta(&fnset_of(n, functions)?)
        .map_err(err)?
        .members()
        .iter()
        .map(pfn_to_map)
        .collect())
}

#[pyfunction]
fn hall_dset(n: u32, pfns: Vec<BTreeMap<u32, u8>>) -> PyResult<Vec<String>> {
    let members = pfns.iter().map(pfn_of).collect::<PyResult<Vec<_>>>()?;
    let set = dset(&FnFamily::new(n, members).map_err(err)?).map_err(err)?;
    Ok(fnset_to_strings(&set))
}

/// Exact subset-norm ratio bounds as "p/q" strings.
#[pyfunction]
fn norm2_bounds(n: u32, g: u32, k: u32) -> PyResult<(String, String)> {
    let params = SubsetNormParams::new(n, g).map_err(err)?;
    Ok((
        ratio_lower_bound(&params, k).map_err(err)?.render(),
        ratio_upper_bound(&params, k).map_err(err)?.render(),
    ))
}

/// The extremal-family refutation; returns (norm, ratio, product,
/// threshold, refuted).
#[pyfunction]
fn refute_baju(n: u32, g: u32, k: u32) -> PyResult<(u32, String, String, String, bool)> {
    let params = SubsetNormParams::new(n, g).map_err(err)?;
    let c = refutation_check(&params, k).map_err(err)?;
    Ok((
        c.norm_of_extremal,
        c.ratio.render(),
        c.miss_product.render(),
        c.threshold.render(),
        c.refuted,
    ))
}

/// Exact k-gon splitting number versus the printed closed form.
#[pyfunction]
fn kgon(n: u32, k: u32) -> PyResult<(u32, u32, bool)> {
    let r = kgon_analysis(n, k).map_err(err)?;
    Ok((r.exact, r.stated, r.matches))
}

#[pyfunction]
fn profile(pfn: BTreeMap<u32, u8>) -> PyResult<Vec<u32>> {
    Ok(bridges::profile(&pfn_of(&pfn)?).elements())
}

#[pyfunction]
fn pstar_scan(points: u32, budget: u64, seed: u64) -> PyResult<(u64, u64)> {
    let r = bridges::pstar_claim_scan(points, budget, seed).map_err(err)?;
    Ok((r.cases, r.violations))
}

#[pyfunction]
fn suites() -> Vec<String> {
    suite_names().into_iter().map(str::to_string).collect()
}

/// Runs a named suite; returns the JSON report.
#[pyfunction]
#[pyo3(signature = (name, seed=1, budget=1000, max_n=None))]
fn verify(name: &str, seed: u64, budget: u64, max_n: Option<i64>) -> PyResult<String> {
    let mut spec = SuiteSpec::new(name).with_seed(seed).with_budget(budget);
    if let Some(n) = max_n {
        spec = spec.with_param("max_n", n);
    }
    Ok(run_suite(&spec).map_err(err)?.to_json())
}

/// The consolidated divergence report as JSON.
#[pyfunction]
fn discrepancies() -> PyResult<String> {
    Ok(discrepancy_report().map_err(err)?.to_json())
}

#[pymodule]
fn normforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFamily>()?;
    m.add_class::<PyFunctionSet>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(factorial_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(norm0, m)?)?;
    m.add_function(wrap_pyfunction!(norm1, m)?)?;
    m.add_function(wrap_pyfunction!(norm2, m)?)?;
    m.add_function(wrap_pyfunction!(norm3, m)?)?;
    m.add_function(wrap_pyfunction!(splitting, m)?)?;
    m.add_function(wrap_pyfunction!(norm3_recursive, m)?)?;
    m.add_function(wrap_pyfunction!(norm4, m)?)?;
    m.add_function(wrap_pyfunction!(hall_hn, m)?)?;
    m.add_function(wrap_pyfunction!(hall_hn_max, m)?)?;
    m.add_function(wrap_pyfunction!(hall_delta, m)?)?;
    m.add_function(wrap_pyfunction!(hall_dset, m)?)?;
    m.add_function(wrap_pyfunction!(norm2_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(refute_baju, m)?)?;
    m.add_function(wrap_pyfunction!(kgon, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(pstar_scan, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(discrepancies, m)?)?;
    Ok(())
}
