//! C ABI for `gadim`.
//!
//! Objects cross the boundary as opaque handles created by `*_new`/`*_parse`
//! functions and released with the matching `*_free`. Fallible functions
//! return a [`GadimStatus`] and write their result through an out pointer;
//! on failure `gadim_last_error` describes what went wrong on the calling
//! thread. Element indices in text are 1-based, as in the CLI.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;
use std::sync::Arc;

use gadim::{AlgebraElem, Error, FieldCtx, Group, GroupCode, IdealSpec, Shortcut, Side};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadimStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed spec, file or element text.
    Parse = 3,
    /// Mathematically invalid request, e.g. a zero ideal where one is not
    /// allowed or operands from different algebras.
    Domain = 4,
    BudgetExceeded = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadimSide {
    Left = 0,
    Right = 1,
}

impl From<GadimSide> for Side {
    fn from(s: GadimSide) -> Side {
        match s {
            GadimSide::Left => Side::Left,
            GadimSide::Right => Side::Right,
        }
    }
}

/// Result of `gadim_dim_bound`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct GadimBound {
    pub lower: usize,
    pub upper: usize,
    /// Multiplicity of `z` in the characteristic polynomial.
    pub k: usize,
    /// True when the generator is idempotent, so `lower` is the dimension.
    pub exact: bool,
}

pub struct GadimField(Arc<FieldCtx>);
pub struct GadimGroup(Arc<Group>);
pub struct GadimElem(AlgebraElem);
pub struct GadimCode(GroupCode);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

/// Message for the last failure on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gadim_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

struct Fail(GadimStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match e {
            Error::BudgetExceeded { .. } => GadimStatus::BudgetExceeded,
            ref e if e.is_input_error() => GadimStatus::Parse,
            _ => GadimStatus::Domain,
        };
        Fail(status, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> GadimStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GadimStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GadimStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(GadimStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(GadimStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<T>(p: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

unsafe fn generators(elems: *const *const GadimElem, count: usize) -> Result<Vec<AlgebraElem>, Fail> {
    if elems.is_null() {
        return Err(null("elems"));
    }
    let mut v = Vec::with_capacity(count);
    for i in 0..count {
        v.push(handle(*elems.add(i), "element")?.0.clone());
    }
    Ok(v)
}

/// Parses a field spec such as `gf:5`, `gf:2^4` or `gf:2^3:1,1,0,1`.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gadim_field_new(spec: *const c_char, out_field: *mut *mut GadimField) -> GadimStatus {
    guard(|| {
        let f = FieldCtx::from_spec(str_arg(spec, "spec")?)?;
        out(out_field, Box::into_raw(Box::new(GadimField(f))), "out_field")
    })
}

/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gadim_field_order(field: *const GadimField) -> u64 {
    field.as_ref().map_or(0, |f| f.0.order())
}

/// # Safety
/// `field` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gadim_field_free(field: *mut GadimField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Builds a group from a spec (`cyclic:n`, `symmetric:n`, ...). When
/// `order_path` is not null it names a Cayley file fixing the element order.
///
/// # Safety
/// `spec` must be a nul-terminated string, `order_path` null or a
/// nul-terminated string, and `out_group` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gadim_group_new(
    spec: *const c_char,
    order_path: *const c_char,
    out_group: *mut *mut GadimGroup,
) -> GadimStatus {
    guard(|| {
        let mut g = Group::from_spec(str_arg(spec, "spec")?)?;
        if !order_path.is_null() {
            let order = Group::read_cayley(Path::new(str_arg(order_path, "order_path")?))?;
            g = Arc::new(g.reindexed(&order)?);
        }
        out(out_group, Box::into_raw(Box::new(GadimGroup(g))), "out_group")
    })
}

/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gadim_group_order(group: *const GadimGroup) -> usize {
    group.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `group` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gadim_group_free(group: *mut GadimGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Parses an element in `index:coeff` text format, e.g. `"1:1,2:1"`.
///
/// # Safety
/// `field` and `group` must be live handles, `text` a nul-terminated string
/// and `out_elem` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gadim_elem_parse(
    field: *const GadimField,
    group: *const GadimGroup,
    text: *const c_char,
    out_elem: *mut *mut GadimElem,
) -> GadimStatus {
    guard(|| {
        let f = handle(field, "field")?;
        let g = handle(group, "group")?;
        let e = AlgebraElem::parse(&f.0, &g.0, str_arg(text, "text")?)?;
        out(out_elem, Box::into_raw(Box::new(GadimElem(e))), "out_elem")
    })
}

/// Product `a * b`.
///
/// # Safety
/// `a` and `b` must be live handles and `out_elem` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gadim_elem_mul(
    a: *const GadimElem,
    b: *const GadimElem,
    out_elem: *mut *mut GadimElem,
) -> GadimStatus {
    guard(|| {
        let p = handle(a, "a")?.0.mul(&handle(b, "b")?.0)?;
        out(out_elem, Box::into_raw(Box::new(GadimElem(p))), "out_elem")
    })
}

/// Single-line text of an element; release it with `gadim_string_free`.
/// Returns null for a null handle.
///
/// # Safety
/// `elem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gadim_elem_to_string(elem: *const GadimElem) -> *mut c_char {
    match elem.as_ref() {
        Some(e) => CString::new(e.0.to_inline()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `elem` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gadim_elem_free(elem: *mut GadimElem) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gadim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Dimension of the ideal generated by `count` elements on `side`.
///
/// # Safety
/// `elems` must point to `count` live handles and `out_dim` be valid.
#[no_mangle]
pub unsafe extern "C" fn gadim_dim_ideal(
    elems: *const *const GadimElem,
    count: usize,
    side: GadimSide,
    out_dim: *mut usize,
) -> GadimStatus {
    guard(|| {
        let spec = IdealSpec::new(side.into(), generators(elems, count)?)?;
        out(out_dim, gadim::dim_ideal(&spec)?, "out_dim")
    })
}

/// Bounds from the characteristic polynomial of the generator's matrix.
///
/// # Safety
/// `elem` must be a live handle and `out_bound` valid.
#[no_mangle]
pub unsafe extern "C" fn gadim_dim_bound(
    elem: *const GadimElem,
    side: GadimSide,
    out_bound: *mut GadimBound,
) -> GadimStatus {
    guard(|| {
        let b = gadim::dim_bound_charpoly(&handle(elem, "elem")?.0, side.into())?;
        let bound = GadimBound { lower: b.lower, upper: b.upper, k: b.k, exact: b.exact };
        out(out_bound, bound, "out_bound")
    })
}

/// Idempotent generator of the principal ideal. Writes null to `out_elem`
/// when none exists.
///
/// # Safety
/// `elem` must be a live handle and `out_elem` valid.
#[no_mangle]
pub unsafe extern "C" fn gadim_idempotent(
    elem: *const GadimElem,
    side: GadimSide,
    out_elem: *mut *mut GadimElem,
) -> GadimStatus {
    guard(|| {
        let e = gadim::idempotent_generator(&handle(elem, "elem")?.0, side.into())?;
        let p = e.map_or(ptr::null_mut(), |e| Box::into_raw(Box::new(GadimElem(e))));
        out(out_elem, p, "out_elem")
    })
}

/// Exact dimension through the characteristic polynomial of `X M` with
/// symbolic `x`, `M` the symmetrized representation matrix.
///
/// # Safety
/// `elem` must be a live handle and `out_dim` valid.
#[no_mangle]
pub unsafe extern "C" fn gadim_dim_mulmuley_exact(
    elem: *const GadimElem,
    side: GadimSide,
    out_dim: *mut usize,
) -> GadimStatus {
    guard(|| {
        let d = gadim::dim_mulmuley_exact(&handle(elem, "elem")?.0, side.into(), Shortcut::Symmetrize)?;
        out(out_dim, d, "out_dim")
    })
}

/// Randomized variant of `gadim_dim_mulmuley_exact`; deterministic for a
/// given `seed`.
///
/// # Safety
/// `elem` must be a live handle and `out_dim` valid.
#[no_mangle]
pub unsafe extern "C" fn gadim_dim_mulmuley_random(
    elem: *const GadimElem,
    side: GadimSide,
    trials: usize,
    seed: u64,
    out_dim: *mut usize,
) -> GadimStatus {
    guard(|| {
        let d = gadim::dim_mulmuley_random(&handle(elem, "elem")?.0, side.into(), trials, seed)?;
        out(out_dim, d, "out_dim")
    })
}

/// Group code of the ideal generated by `count` elements.
///
/// # Safety
/// `elems` must point to `count` live handles and `out_code` be valid.
#[no_mangle]
pub unsafe extern "C" fn gadim_code_build(
    elems: *const *const GadimElem,
    count: usize,
    side: GadimSide,
    out_code: *mut *mut GadimCode,
) -> GadimStatus {
    guard(|| {
        let spec = IdealSpec::new(side.into(), generators(elems, count)?)?;
        let code = GroupCode::build(&spec)?;
        out(out_code, Box::into_raw(Box::new(GadimCode(code))), "out_code")
    })
}

/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gadim_code_n(code: *const GadimCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.n)
}

/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gadim_code_k(code: *const GadimCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.k)
}

/// Minimum distance by exhaustive search over at most `budget` codewords.
///
/// # Safety
/// `code` must be a live handle and `out_distance` valid.
#[no_mangle]
pub unsafe extern "C" fn gadim_code_min_distance(
    code: *const GadimCode,
    budget: u64,
    out_distance: *mut usize,
) -> GadimStatus {
    guard(|| {
        let d = handle(code, "code")?.0.min_distance(budget as u128)?;
        out(out_distance, d, "out_distance")
    })
}

/// Export format of the code; release it with `gadim_string_free`.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gadim_code_to_string(code: *const GadimCode) -> *mut c_char {
    match code.as_ref() {
        Some(c) => CString::new(c.0.to_text()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `code` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gadim_code_free(code: *mut GadimCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}
