//! Low-discrepancy sequences.

/// Radical-inverse (van der Corput) value of `index` in the given base.
///
/// Reverses the base-`base` digits of `index` about the radix point:
/// `van_der_corput(6, 2) = 0.011_2 = 0.375`.  Always lies in `[0, 1)`.
pub fn van_der_corput(index: u64, base: u32) -> f64 {
    assert!(base >= 2, "van der Corput base must be >= 2");
    let base_f = base as f64;
    let mut n = index;
    let mut inv = 1.0 / base_f;
    let mut value = 0.0;
    while n > 0 {
        value += (n % base as u64) as f64 * inv;
        n /= base as u64;
        inv /= base_f;
    }
    value
}
