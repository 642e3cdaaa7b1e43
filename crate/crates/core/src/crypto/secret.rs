//! Fixed-size secret buffers that are wiped when dropped.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand_core::{CryptoRng, RngCore};
use subtle::ConstantTimeEq;
use zeroize::Zeroize;

use super::CryptoError;

static ERASURES: AtomicU64 = AtomicU64::new(0);

/// Number of [`Secret`] buffers wiped so far in this process. Only counted in
/// builds with debug assertions; always zero otherwise.
pub fn erasure_count() -> u64 {
    ERASURES.load(Ordering::Relaxed)
}

/// Secret key material of `N` bytes, zeroized on drop.
pub struct Secret<const N: usize>([u8; N]);

impl<const N: usize> Secret<N> {
    pub fn new(bytes: [u8; N]) -> Self {
        Self(bytes)
    }

    /// Copies `bytes` into a new secret and wipes the source.
    pub fn take_from(bytes: &mut [u8; N]) -> Self {
        let out = Self(*bytes);
        bytes.zeroize();
        out
    }

    pub fn random<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Result<Self, CryptoError> {
        let mut out = Self([0u8; N]);
        rng.try_fill_bytes(&mut out.0)
            .map_err(|_| CryptoError::RandomnessFailure)?;
        Ok(out)
    }

    pub fn expose(&self) -> &[u8; N] {
        &self.0
    }

    pub(crate) fn expose_mut(&mut self) -> &mut [u8; N] {
        &mut self.0
    }
}

impl<const N: usize> Clone for Secret<N> {
    fn clone(&self) -> Self {
        Self(self.0)
    }
}

impl<const N: usize> Drop for Secret<N> {
    fn drop(&mut self) {
        self.0.zeroize();
        if cfg!(debug_assertions) {
            ERASURES.fetch_add(1, Ordering::Relaxed);
        }
    }
}

impl<const N: usize> PartialEq for Secret<N> {
    fn eq(&self, other: &Self) -> bool {
        self.0.ct_eq(&other.0).into()
    }
}

impl<const N: usize> Eq for Secret<N> {}

impl<const N: usize> fmt::Debug for Secret<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Secret<{N}>(..)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drop_is_counted() {
        let before = erasure_count();
        drop(Secret::new([7u8; 32]));
        drop(Secret::new([7u8; 16]));
        assert!(erasure_count() >= before + 2);
    }

    #[test]
    fn take_from_wipes_source() {
        let mut raw = [5u8; 32];
        let s = Secret::take_from(&mut raw);
        assert_eq!(raw, [0u8; 32]);
        assert_eq!(s.expose(), &[5u8; 32]);
    }

    #[test]
    fn debug_hides_bytes() {
        let s = Secret::new([0xAB; 4]);
        assert!(!format!("{s:?}").contains("171"));
    }
}
