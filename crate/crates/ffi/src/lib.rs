//! C ABI over the cyquiv core.
//!
//! Every function returns a [`CyqStatus`]; results come back through out-parameters.
//! Handles and strings handed out here must be released with the matching
//! `*_free` function. After a non-OK status, `cyq_last_error` describes the failure
//! on the calling thread.

use cyquiv::catalog::{get_monad_template, MonadId, ShiftMatrix};
use cyquiv::characters::character_of_shift;
use cyquiv::framing::{framed_relations, FramedQuiverWithPotential, FramedRelationSet};
use cyquiv::linalg::QMatrix;
use cyquiv::monad::{assemble, certify_d_squared, MonadComplex};
use cyquiv::partitions;
use cyquiv::qseries::{self, compare, Comparison, QSeries, Ring, SeriesJson};
use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyqStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    NotInCatalog = 4,
    /// A check ran to completion and failed (d² not in the ideal, series differ).
    VerificationFailed = 5,
    Panic = 6,
}

/// Truncated power series.
pub struct CyqSeries {
    inner: QSeries,
}

/// Assembled monad complex together with its relation set.
pub struct CyqMonad {
    complex: MonadComplex,
    relations: FramedRelationSet,
    marked: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(CyqStatus, String);

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CyqStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CyqStatus::Ok,
        Ok(Err(Fail(s, m))) => {
            set_error(m);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            CyqStatus::Panic
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Fail {
    Fail(CyqStatus::InvalidArgument, e.to_string())
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(CyqStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(CyqStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(CyqStatus::NullArgument, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(CyqStatus::NullArgument, format!("{what} is null")));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(invalid)?;
    put(out, c.into_raw(), "output string")
}

unsafe fn put_series(out: *mut *mut CyqSeries, s: QSeries) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(CyqStatus::NullArgument, "output handle is null".into()));
    }
    out.write(Box::into_raw(Box::new(CyqSeries { inner: s })));
    Ok(())
}

/// Static version string; do not free.
#[no_mangle]
pub extern "C" fn cyq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Copy of the message recorded by the last call on this thread, or NULL if there is none.
/// Free with `cyq_string_free`.
#[no_mangle]
pub extern "C" fn cyq_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn cyq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Generating series of a combinatorial family: `partitions`, `tuples`, `nested`,
/// `plane`, `pyramid` or `blowup`. `rank` is used by `tuples` and `nested`.
///
/// # Safety
/// `family` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_count(family: *const c_char, order: i64, rank: u32, out: *mut *mut CyqSeries) -> CyqStatus {
    guard(|| {
        let fam = text(family, "family")?;
        let n = u32::try_from(order).map_err(|_| invalid("order must be non-negative"))?;
        let s = match fam {
            "partitions" => partitions::partition_series(n),
            "tuples" => partitions::tuple_series(rank, n),
            "nested" => partitions::nested_series(rank, n),
            "plane" => partitions::plane_partition_series(order, None, None).map_err(invalid)?,
            "pyramid" => partitions::pyramid_series(order).map_err(invalid)?,
            "blowup" => partitions::blowup_series(n, None),
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        put_series(out, s)
    })
}

/// `M(q) = ∏ (1 − q^k)^{−k}` in one variable.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_macmahon(order: i64, out: *mut *mut CyqSeries) -> CyqStatus {
    guard(|| put_series(out, qseries::macmahon(&Ring::q(), &[0], &[1], order).map_err(invalid)?))
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_from_json(json: *const c_char, out: *mut *mut CyqSeries) -> CyqStatus {
    guard(|| {
        let j: SeriesJson = serde_json::from_str(text(json, "json")?).map_err(invalid)?;
        put_series(out, QSeries::from_json(&j).map_err(invalid)?)
    })
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_to_json(s: *const CyqSeries, out: *mut *mut c_char) -> CyqStatus {
    guard(|| {
        let s = handle(s, "series")?;
        put_string(out, serde_json::to_string(&s.inner.to_json()).unwrap())
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_mul(a: *const CyqSeries, b: *const CyqSeries, out: *mut *mut CyqSeries) -> CyqStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        put_series(out, a.inner.mul(&b.inner).map_err(invalid)?)
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_inverse(a: *const CyqSeries, out: *mut *mut CyqSeries) -> CyqStatus {
    guard(|| put_series(out, handle(a, "a")?.inner.inverse().map_err(invalid)?))
}

/// Coefficient of the monomial with exponent vector `exp[0..len]`, as a decimal string.
///
/// # Safety
/// `s` must be a live handle, `exp` must point at `len` values, `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_coefficient(s: *const CyqSeries, exp: *const i64, len: usize, out: *mut *mut c_char) -> CyqStatus {
    guard(|| {
        let s = handle(s, "series")?;
        if exp.is_null() && len > 0 {
            return Err(Fail(CyqStatus::NullArgument, "exponent vector is null".into()));
        }
        let e = if len == 0 { &[][..] } else { std::slice::from_raw_parts(exp, len) };
        if e.len() != s.inner.ring().nvars() {
            return Err(invalid(format!("expected {} exponents, got {}", s.inner.ring().nvars(), e.len())));
        }
        put_string(out, s.inner.coeff(e).to_string())
    })
}

/// Sets `*equal` and returns OK when the comparison ran; rings must match.
/// On a mismatch the first differing monomial is left in `cyq_last_error`.
///
/// # Safety
/// `a`, `b` must be live handles; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_compare(a: *const CyqSeries, b: *const CyqSeries, order: i64, equal: *mut bool) -> CyqStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        let c = compare(&a.inner, &b.inner, order).map_err(invalid)?;
        if let Comparison::Mismatch { exp, left, right } = &c {
            set_error(format!("first mismatch at {exp:?}: {left} vs {right}"));
        }
        put(equal, c == Comparison::Equal, "equal")
    })
}

/// # Safety
/// `s` must come from this library or be NULL; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn cyq_series_free(s: *mut CyqSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Enumeration against closed form for a named target (`c3-dt`, `conifold-ncdt`,
/// `y20-ncdt`, `orbifold-ncdt`, `vw-rank1`, `nested`, `blowup`). Returns
/// `VERIFICATION_FAILED` on a mismatch.
///
/// # Safety
/// `target` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn cyq_compare_target(target: *const c_char, order: i64, m: usize, rank: u32) -> CyqStatus {
    guard(|| {
        let t = text(target, "target")?;
        let (a, b) = cyquiv::cli::compare_sides(t, order, m, rank).map_err(invalid)?;
        let cmp_order = if t == "blowup" { 2 * order } else { order };
        match compare(&a, &b, cmp_order).map_err(invalid)? {
            Comparison::Equal => Ok(()),
            Comparison::Mismatch { exp, left, right } => Err(Fail(CyqStatus::VerificationFailed, format!("{t}: mismatch at {exp:?}: {left} vs {right}"))),
        }
    })
}

/// Vacuum character of the shift `shift` (`"s21,s32,.."`, optionally `"U;L"`) for
/// `gl(m|n)` at family index `t`, as a JSON array of decimal strings.
///
/// # Safety
/// `shift` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_character(m: usize, n: usize, shift: *const c_char, t: u32, order: i64, out: *mut *mut c_char) -> CyqStatus {
    guard(|| {
        let s = ShiftMatrix::parse(m, n, text(shift, "shift")?).map_err(invalid)?;
        let ch = character_of_shift(&s, t, order).map_err(invalid)?;
        let v: Vec<String> = ch.univariate().iter().map(|c| c.to_string()).collect();
        put_string(out, serde_json::to_string(&v).unwrap())
    })
}

/// # Safety
/// `id` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyq_monad_load(id: *const c_char, out: *mut *mut CyqMonad) -> CyqStatus {
    guard(|| {
        let id: MonadId = text(id, "id")?.parse().map_err(|e| Fail(CyqStatus::NotInCatalog, format!("{e}")))?;
        let t = get_monad_template(id).map_err(|e| Fail(CyqStatus::NotInCatalog, e.to_string()))?;
        let complex = assemble(&t, &BTreeMap::new()).map_err(|e| Fail(CyqStatus::VerificationFailed, e.to_string()))?;
        let relations = framed_relations(&FramedQuiverWithPotential::new(&t.id, t.quiver.clone(), t.potential.clone(), &[], &[])).map_err(invalid)?;
        let marked = t.quiver.arrows().iter().filter(|a| a.marked).map(|a| a.name.clone()).collect();
        if out.is_null() {
            return Err(Fail(CyqStatus::NullArgument, "output handle is null".into()));
        }
        out.write(Box::into_raw(Box::new(CyqMonad { complex, relations, marked })));
        Ok(())
    })
}

/// Certifies d² ≡ 0 modulo the relations, with marked arrows either symbolic or
/// bound to zero. On success `*certified` is the number of certified coefficients.
///
/// # Safety
/// `m` must be a live handle; `certified` must be writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn cyq_monad_certify(m: *const CyqMonad, bind_marked_zero: bool, certified: *mut usize) -> CyqStatus {
    guard(|| {
        let m = handle(m, "monad")?;
        let mut rels = m.relations.clone();
        if bind_marked_zero {
            for a in &m.marked {
                rels.bindings.insert(a.clone(), QMatrix::zeros(1, 1));
            }
        }
        let r = certify_d_squared(&m.complex, &rels).map_err(|e| Fail(CyqStatus::VerificationFailed, e.to_string()))?;
        if !certified.is_null() {
            certified.write(r.records.len());
        }
        Ok(())
    })
}

/// # Safety
/// `m` must come from this library or be NULL; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn cyq_monad_free(m: *mut CyqMonad) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}
