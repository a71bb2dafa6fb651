//! C ABI for the gelfand library.
//!
//! Models are built behind opaque handles; every function returns a
//! status code and reports details through a thread-local error message.
//! Strings handed out by the library must be released with
//! `gelfand_string_free`, handles with `gelfand_model_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gelfand::combinatorics::PartialInjection;
use gelfand::hecke::HeckeModel;
use gelfand::qrook::QRookModel;
use gelfand::scalars::Rational;
use gelfand::semigroup::{fstar_adapter, isn_adapter, SemigroupModel};
use gelfand::sn_model::SnModel;
use gelfand::verify::ColMatrix;

/// Status of a C API call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GelfandStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of range or unparsable.
    InvalidArgument = 2,
    /// The requested size exceeds the built-in bound of the model.
    CapacityExceeded = 3,
    /// The semigroup hypotheses failed; the message carries the
    /// diagnosis.
    HypothesisFailed = 4,
    /// The model was built but a structural verification failed.
    VerificationFailed = 5,
    /// An internal panic was caught; the handle remains valid.
    InternalPanic = 6,
}

enum ModelInner {
    Sn(SnModel),
    Isn(Box<SemigroupModel>, Vec<PartialInjection>),
    Fstar(Box<SemigroupModel>),
    Hecke(HeckeModel),
    Qrook(QRookModel),
}

/// Opaque handle to a built model.
pub struct GelfandModel {
    inner: ModelInner,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let message = CString::new(message.into()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

/// Message describing the most recent failure on this thread. The
/// pointer stays valid until the next failing call on the same thread;
/// do not free it.
#[no_mangle]
pub extern "C" fn gelfand_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string; do not free it.
#[no_mangle]
pub extern "C" fn gelfand_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

fn guarded<F: FnOnce() -> GelfandStatus>(f: F) -> GelfandStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".to_string());
            set_error(message);
            GelfandStatus::InternalPanic
        }
    }
}

fn build_model(kind: &str, n: usize, out: *mut *mut GelfandModel) -> GelfandStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return GelfandStatus::NullPointer;
    }
    let cap = match kind {
        "sn" | "hecke" => 6,
        _ => 4,
    };
    if n > cap {
        set_error(format!("model {kind} is capped at n = {cap}"));
        return GelfandStatus::CapacityExceeded;
    }
    let inner = match kind {
        "sn" => ModelInner::Sn(SnModel::new(n)),
        "hecke" => ModelInner::Hecke(HeckeModel::new(n)),
        "qrook" => ModelInner::Qrook(QRookModel::new(n)),
        "isn" => {
            let (s, adapter, elements) = isn_adapter(n);
            match SemigroupModel::build(s, &adapter) {
                Ok(model) => ModelInner::Isn(Box::new(model), elements),
                Err(e) => {
                    set_error(e.to_string());
                    return GelfandStatus::HypothesisFailed;
                }
            }
        }
        "fstar" => {
            let (s, adapter, _) = fstar_adapter(n);
            match SemigroupModel::build(s, &adapter) {
                Ok(model) => ModelInner::Fstar(Box::new(model)),
                Err(e) => {
                    set_error(e.to_string());
                    return GelfandStatus::HypothesisFailed;
                }
            }
        }
        _ => unreachable!("fixed model kinds"),
    };
    let handle = Box::new(GelfandModel { inner });
    // the caller owns the handle from here
    unsafe { *out = Box::into_raw(handle) };
    GelfandStatus::Ok
}

/// Builds the symmetric group involution model on `n` points.
#[no_mangle]
pub extern "C" fn gelfand_sn_model_new(n: usize, out: *mut *mut GelfandModel) -> GelfandStatus {
    guarded(|| build_model("sn", n, out))
}

/// Builds the rook monoid model on `n` points.
#[no_mangle]
pub extern "C" fn gelfand_isn_model_new(n: usize, out: *mut *mut GelfandModel) -> GelfandStatus {
    guarded(|| build_model("isn", n, out))
}

/// Builds the uniform block bijection monoid model on `n` points.
#[no_mangle]
pub extern "C" fn gelfand_fstar_model_new(n: usize, out: *mut *mut GelfandModel) -> GelfandStatus {
    guarded(|| build_model("fstar", n, out))
}

/// Builds the Hecke algebra model on `n` points, over `Z[q]`.
#[no_mangle]
pub extern "C" fn gelfand_hecke_model_new(n: usize, out: *mut *mut GelfandModel) -> GelfandStatus {
    guarded(|| build_model("hecke", n, out))
}

/// Builds the q-rook monoid algebra model on `n` points, over `Z[q]`.
#[no_mangle]
pub extern "C" fn gelfand_qrook_model_new(n: usize, out: *mut *mut GelfandModel) -> GelfandStatus {
    guarded(|| build_model("qrook", n, out))
}

/// Releases a model handle. Passing null is a no-op.
#[no_mangle]
pub extern "C" fn gelfand_model_free(model: *mut GelfandModel) {
    if !model.is_null() {
        // retake ownership and drop
        drop(unsafe { Box::from_raw(model) });
    }
}

/// Releases a string returned by this library. Passing null is a no-op.
#[no_mangle]
pub extern "C" fn gelfand_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

unsafe fn deref_model<'a>(model: *const GelfandModel) -> Option<&'a GelfandModel> {
    model.as_ref()
}

/// Dimension of the model (number of involution basis vectors).
#[no_mangle]
pub extern "C" fn gelfand_model_dimension(
    model: *const GelfandModel,
    out: *mut usize,
) -> GelfandStatus {
    guarded(|| {
        let Some(model) = (unsafe { deref_model(model) }) else {
            set_error("model handle is null");
            return GelfandStatus::NullPointer;
        };
        if out.is_null() {
            set_error("output pointer is null");
            return GelfandStatus::NullPointer;
        }
        let dim = match &model.inner {
            ModelInner::Sn(m) => m.dimension(),
            ModelInner::Isn(m, _) => m.dimension(),
            ModelInner::Fstar(m) => m.dimension(),
            ModelInner::Hecke(m) => m.dimension(),
            ModelInner::Qrook(m) => m.dimension(),
        };
        unsafe { *out = dim };
        GelfandStatus::Ok
    })
}

/// Number of generator matrices the model exports.
#[no_mangle]
pub extern "C" fn gelfand_model_generator_count(
    model: *const GelfandModel,
    out: *mut usize,
) -> GelfandStatus {
    guarded(|| {
        let Some(model) = (unsafe { deref_model(model) }) else {
            set_error("model handle is null");
            return GelfandStatus::NullPointer;
        };
        if out.is_null() {
            set_error("output pointer is null");
            return GelfandStatus::NullPointer;
        }
        let count = match &model.inner {
            ModelInner::Sn(m) => m.generator_matrices().len(),
            ModelInner::Isn(m, _) => m.generator_matrices().len(),
            ModelInner::Fstar(m) => m.generator_matrices().len(),
            ModelInner::Hecke(m) => m.generators().len(),
            ModelInner::Qrook(m) => m.all_generators().len(),
        };
        unsafe { *out = count };
        GelfandStatus::Ok
    })
}

fn int_matrix_value(m: &ColMatrix<i64>) -> serde_json::Value {
    let dim = m.dim();
    let rows: Vec<Vec<i64>> = (0..dim)
        .map(|r| (0..dim).map(|c| m.entry(r, c)).collect())
        .collect();
    serde_json::to_value(rows).expect("serializable")
}

fn poly_matrix_value(m: &ColMatrix<gelfand::scalars::QPoly>) -> serde_json::Value {
    let dim = m.dim();
    let rows: Vec<Vec<gelfand::scalars::QPoly>> = (0..dim)
        .map(|r| (0..dim).map(|c| m.entry(r, c)).collect())
        .collect();
    serde_json::to_value(rows).expect("serializable")
}

fn export_json(model: &GelfandModel) -> String {
    let (name, basis, generators): (&str, serde_json::Value, Vec<serde_json::Value>) =
        match &model.inner {
            ModelInner::Sn(m) => (
                "sn",
                serde_json::to_value(m.basis()).unwrap(),
                m.generator_matrices()
                    .iter()
                    .map(|(name, mat)| {
                        serde_json::json!({"name": name, "matrix": int_matrix_value(mat)})
                    })
                    .collect(),
            ),
            ModelInner::Isn(m, elements) => (
                "isn",
                serde_json::to_value(
                    m.basis().iter().map(|&w| &elements[w]).collect::<Vec<_>>(),
                )
                .unwrap(),
                m.generator_matrices()
                    .iter()
                    .map(|(name, mat)| {
                        serde_json::json!({"name": name, "matrix": int_matrix_value(mat)})
                    })
                    .collect(),
            ),
            ModelInner::Fstar(m) => (
                "fstar",
                serde_json::to_value(
                    m.basis()
                        .iter()
                        .map(|&w| m.semigroup().name(w))
                        .collect::<Vec<_>>(),
                )
                .unwrap(),
                m.generator_matrices()
                    .iter()
                    .map(|(name, mat)| {
                        serde_json::json!({"name": name, "matrix": int_matrix_value(mat)})
                    })
                    .collect(),
            ),
            ModelInner::Hecke(m) => (
                "hecke",
                serde_json::to_value(m.basis()).unwrap(),
                m.generator_matrices()
                    .iter()
                    .map(|(name, mat)| {
                        serde_json::json!({"name": name, "matrix": poly_matrix_value(mat)})
                    })
                    .collect(),
            ),
            ModelInner::Qrook(m) => (
                "qrook",
                serde_json::to_value(m.basis()).unwrap(),
                m.generator_matrices()
                    .iter()
                    .map(|(name, mat)| {
                        serde_json::json!({"name": name, "matrix": poly_matrix_value(mat)})
                    })
                    .collect(),
            ),
        };
    let dimension = basis.as_array().map_or(0, |a| a.len());
    serde_json::to_string_pretty(&serde_json::json!({
        "model": name,
        "dimension": dimension,
        "basis": basis,
        "generators": generators,
    }))
    .expect("serializable")
}

/// Serializes the model basis and generator matrices as JSON. The
/// returned string must be freed with `gelfand_string_free`.
#[no_mangle]
pub extern "C" fn gelfand_model_to_json(
    model: *const GelfandModel,
    out: *mut *mut c_char,
) -> GelfandStatus {
    guarded(|| {
        let Some(model) = (unsafe { deref_model(model) }) else {
            set_error("model handle is null");
            return GelfandStatus::NullPointer;
        };
        if out.is_null() {
            set_error("output pointer is null");
            return GelfandStatus::NullPointer;
        }
        let json = export_json(model);
        match CString::new(json) {
            Ok(s) => {
                unsafe { *out = s.into_raw() };
                GelfandStatus::Ok
            }
            Err(_) => {
                set_error("export contained an interior NUL byte");
                GelfandStatus::InternalPanic
            }
        }
    })
}

fn structural_verify(model: &GelfandModel) -> Result<(), String> {
    match &model.inner {
        ModelInner::Sn(m) => {
            let n = m.n();
            for i in 1..n {
                let s = gelfand::combinatorics::Permutation::adjacent(n, i);
                let sm = m.matrix(&s);
                for b in gelfand::combinatorics::all_permutations(n) {
                    if sm.mul(&m.matrix(&b)) != m.matrix(&s.compose(&b)) {
                        return Err(format!("homomorphism fails at s{i}"));
                    }
                }
            }
            Ok(())
        }
        ModelInner::Isn(m, _) | ModelInner::Fstar(m) => {
            let failure = if m.semigroup().size() <= 40 {
                m.check_module_axiom(m.exhaustive_pairs())
            } else {
                m.check_module_axiom(m.generator_pairs())
            };
            failure.map_or(Ok(()), |f| Err(f.to_string()))
        }
        ModelInner::Hecke(m) => match m.check_relations() {
            Ok(None) => {
                if m.block_structure_ok() {
                    Ok(())
                } else {
                    Err("generator block structure violated".into())
                }
            }
            Ok(Some(witness)) => Err(witness.to_string()),
            Err(e) => Err(e.to_string()),
        },
        ModelInner::Qrook(m) => match m.check_relations() {
            Ok(None) => {
                if m.grading_ok() {
                    Ok(())
                } else {
                    Err("domain-size grading violated".into())
                }
            }
            Ok(Some(witness)) => Err(witness.to_string()),
            Err(e) => Err(e.to_string()),
        },
    }
}

/// Runs the structural verification of the model: defining relations and
/// block structure for the deformed models, the matrix homomorphism and
/// module axiom for the undeformed ones. `out_passed` receives the
/// verdict; the status is `VerificationFailed` (with a message) exactly
/// when the verdict is false.
#[no_mangle]
pub extern "C" fn gelfand_model_verify(
    model: *const GelfandModel,
    out_passed: *mut bool,
) -> GelfandStatus {
    guarded(|| {
        let Some(model) = (unsafe { deref_model(model) }) else {
            set_error("model handle is null");
            return GelfandStatus::NullPointer;
        };
        if out_passed.is_null() {
            set_error("output pointer is null");
            return GelfandStatus::NullPointer;
        }
        match structural_verify(model) {
            Ok(()) => {
                unsafe { *out_passed = true };
                GelfandStatus::Ok
            }
            Err(message) => {
                unsafe { *out_passed = false };
                set_error(message);
                GelfandStatus::VerificationFailed
            }
        }
    })
}

/// Commutant dimension of the model's generator matrices with `q`
/// specialized at the rational point `q0` (a string, `"p"` or `"p/q"`);
/// the undeformed models ignore `q0`. For a multiplicity-free model this
/// equals the number of simple modules.
///
/// # Safety
/// `q0` must be a valid NUL-terminated string or null (treated as "2").
#[no_mangle]
pub unsafe extern "C" fn gelfand_model_commutant_dimension(
    model: *const GelfandModel,
    q0: *const c_char,
    out: *mut usize,
) -> GelfandStatus {
    guarded(|| {
        let Some(model) = (unsafe { deref_model(model) }) else {
            set_error("model handle is null");
            return GelfandStatus::NullPointer;
        };
        if out.is_null() {
            set_error("output pointer is null");
            return GelfandStatus::NullPointer;
        }
        let q0 = if q0.is_null() {
            Rational::from_integer(2)
        } else {
            let text = unsafe { std::ffi::CStr::from_ptr(q0) }.to_string_lossy();
            match text.parse::<Rational>() {
                Ok(v) if !v.is_zero() => v,
                Ok(_) => {
                    set_error("q0 must be nonzero");
                    return GelfandStatus::InvalidArgument;
                }
                Err(e) => {
                    set_error(format!("bad q0: {e}"));
                    return GelfandStatus::InvalidArgument;
                }
            }
        };
        let mats: Vec<_> = match &model.inner {
            ModelInner::Sn(m) => m
                .generator_matrices()
                .into_iter()
                .map(|(_, mat)| mat.map(|&v| Rational::from_integer(v)).to_dense())
                .collect(),
            ModelInner::Isn(m, _) => m
                .generator_matrices()
                .into_iter()
                .map(|(_, mat)| mat.map(|&v| Rational::from_integer(v)).to_dense())
                .collect(),
            ModelInner::Fstar(m) => m
                .generator_matrices()
                .into_iter()
                .map(|(_, mat)| mat.map(|&v| Rational::from_integer(v)).to_dense())
                .collect(),
            ModelInner::Hecke(m) => m
                .specialized_generators(&q0)
                .iter()
                .map(|mat| mat.to_dense())
                .collect(),
            ModelInner::Qrook(m) => m
                .specialized_generators(&q0)
                .iter()
                .map(|mat| mat.to_dense())
                .collect(),
        };
        if mats.is_empty() {
            set_error("model has no generators at this size");
            return GelfandStatus::InvalidArgument;
        }
        if mats[0].rows() > 20 {
            set_error("commutant computation is capped at dimension 20 over the C ABI");
            return GelfandStatus::CapacityExceeded;
        }
        let dim = gelfand::verify::commutant_dim(&mats);
        unsafe { *out = dim };
        GelfandStatus::Ok
    })
}
