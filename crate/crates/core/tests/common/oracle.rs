//! Straight-line reference computations that share no code with the crate:
//! Curve25519 arithmetic on big integers, hashing and AES-GCM from `ring`.

use num_bigint::BigUint;
use ring::aead::{Aad, LessSafeKey, Nonce, UnboundKey, AES_256_GCM};
use ring::digest;

fn prime() -> BigUint {
    (BigUint::from(1u8) << 255u32) - BigUint::from(19u8)
}

fn decode(bytes: &[u8; 32]) -> BigUint {
    let mut b = *bytes;
    b[31] &= 0x7F;
    BigUint::from_bytes_le(&b) % prime()
}

fn encode(x: &BigUint) -> [u8; 32] {
    let mut out = [0u8; 32];
    let le = x.to_bytes_le();
    out[..le.len()].copy_from_slice(&le);
    out
}

fn sub(a: &BigUint, b: &BigUint, p: &BigUint) -> BigUint {
    (a + p - b) % p
}

fn inv(a: &BigUint, p: &BigUint) -> BigUint {
    a.modpow(&(p - BigUint::from(2u8)), p)
}

pub fn clamp(mut k: [u8; 32]) -> [u8; 32] {
    k[0] &= 248;
    k[31] &= 127;
    k[31] |= 64;
    k
}

/// Montgomery ladder for X25519 over plain big integers.
pub fn x25519(scalar: &[u8; 32], u: &[u8; 32]) -> [u8; 32] {
    let p = prime();
    let k = BigUint::from_bytes_le(&clamp(*scalar));
    let x1 = decode(u);
    let a24 = BigUint::from(121_665u32);
    let (mut x2, mut z2) = (BigUint::from(1u8), BigUint::from(0u8));
    let (mut x3, mut z3) = (x1.clone(), BigUint::from(1u8));
    let mut swap = false;
    for t in (0..255u64).rev() {
        let bit = k.bit(t);
        if swap != bit {
            std::mem::swap(&mut x2, &mut x3);
            std::mem::swap(&mut z2, &mut z3);
        }
        swap = bit;
        let a = (&x2 + &z2) % &p;
        let aa = (&a * &a) % &p;
        let b = sub(&x2, &z2, &p);
        let bb = (&b * &b) % &p;
        let e = sub(&aa, &bb, &p);
        let c = (&x3 + &z3) % &p;
        let d = sub(&x3, &z3, &p);
        let da = (&d * &a) % &p;
        let cb = (&c * &b) % &p;
        let s = (&da + &cb) % &p;
        x3 = (&s * &s) % &p;
        let diff = sub(&da, &cb, &p);
        z3 = (&x1 * ((&diff * &diff) % &p)) % &p;
        x2 = (&aa * &bb) % &p;
        z2 = (&e * ((&aa + (&a24 * &e) % &p) % &p)) % &p;
    }
    if swap {
        std::mem::swap(&mut x2, &mut x3);
        std::mem::swap(&mut z2, &mut z3);
    }
    encode(&((&x2 * inv(&z2, &p)) % &p))
}

pub fn basepoint() -> [u8; 32] {
    let mut b = [0u8; 32];
    b[0] = 9;
    b
}

/// Edwards y to Montgomery u: `(1 + y) / (1 - y)`.
pub fn edwards_to_montgomery(public_ed: &[u8; 32]) -> [u8; 32] {
    let p = prime();
    let y = decode(public_ed);
    let one = BigUint::from(1u8);
    let num = (&one + &y) % &p;
    let den = sub(&one, &y, &p);
    encode(&((num * inv(&den, &p)) % &p))
}

pub fn sha512(parts: &[&[u8]]) -> Vec<u8> {
    let mut ctx = digest::Context::new(&digest::SHA512);
    parts.iter().for_each(|p| ctx.update(p));
    ctx.finish().as_ref().to_vec()
}

pub fn sha256(parts: &[&[u8]]) -> Vec<u8> {
    let mut ctx = digest::Context::new(&digest::SHA256);
    parts.iter().for_each(|p| ctx.update(p));
    ctx.finish().as_ref().to_vec()
}

/// Suite hash by wire id.
pub fn suite_hash(suite_id: u32, parts: &[&[u8]]) -> Vec<u8> {
    match suite_id {
        1 => sha512(parts),
        2 => sha256(parts),
        _ => unreachable!(),
    }
}

/// X25519 private scalar belonging to an Ed25519 seed.
pub fn seed_to_x25519(seed: &[u8; 32]) -> [u8; 32] {
    let h = sha512(&[seed]);
    clamp(h[..32].try_into().unwrap())
}

pub fn gcm_seal(key: &[u8; 32], nonce: &[u8; 12], plaintext: &[u8]) -> Vec<u8> {
    let key = LessSafeKey::new(UnboundKey::new(&AES_256_GCM, key).unwrap());
    let mut buf = plaintext.to_vec();
    key.seal_in_place_append_tag(Nonce::assume_unique_for_key(*nonce), Aad::empty(), &mut buf)
        .unwrap();
    buf
}

pub fn gcm_open(key: &[u8; 32], nonce: &[u8; 12], ciphertext: &[u8]) -> Option<Vec<u8>> {
    let key = LessSafeKey::new(UnboundKey::new(&AES_256_GCM, key).unwrap());
    let mut buf = ciphertext.to_vec();
    let len = key
        .open_in_place(Nonce::assume_unique_for_key(*nonce), Aad::empty(), &mut buf)
        .ok()?
        .len();
    buf.truncate(len);
    Some(buf)
}

/// Recovers the container AES key for the holder of `seed`, following the
/// decryption steps literally: tag, block lookup, key agreement, second pre
/// key, XOR. Reads the public part directly from the raw file bytes.
pub fn recover_aes_key(file: &[u8], seed: &[u8; 32], public_ed: &[u8; 32]) -> Option<[u8; 32]> {
    let suite = u32::from_le_bytes(file[4..8].try_into().unwrap());
    let m = u32::from_le_bytes(file[16..20].try_into().unwrap()) as usize;
    let salt = &file[20..36];
    let tag = &suite_hash(suite, &[public_ed, salt])[..16];
    let sk_x = seed_to_x25519(seed);
    let pk_x = edwards_to_montgomery(public_ed);
    (0..m).find_map(|i| {
        let block = &file[48 + 80 * i..48 + 80 * (i + 1)];
        if &block[..16] != tag {
            return None;
        }
        let pk_e: [u8; 32] = block[16..48].try_into().unwrap();
        let shared = x25519(&sk_x, &pk_e);
        let pre2 = suite_hash(suite, &[&shared, &pk_x, &pk_e]);
        Some(std::array::from_fn(|j| block[48 + j] ^ pre2[j]))
    })
}
