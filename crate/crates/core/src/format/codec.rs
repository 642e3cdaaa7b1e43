//! Primitive field encodings: little-endian u32, fixed byte arrays and
//! length-prefixed UTF-8 strings.

use super::FormatError;

pub fn encode_u32(value: u32) -> [u8; 4] {
    value.to_le_bytes()
}

pub fn decode_u32(bytes: [u8; 4]) -> u32 {
    u32::from_le_bytes(bytes)
}

pub fn put_u32(out: &mut Vec<u8>, value: u32) {
    out.extend_from_slice(&encode_u32(value));
}

/// Appends a length-prefixed UTF-8 string.
pub fn put_string(out: &mut Vec<u8>, text: &str) -> Result<(), FormatError> {
    let len = u32::try_from(text.len()).map_err(|_| FormatError::OversizeString(text.len()))?;
    put_u32(out, len);
    out.extend_from_slice(text.as_bytes());
    Ok(())
}

/// Encodes `text` as a 4-byte little-endian byte length followed by its UTF-8
/// bytes. Rust strings never carry a byte order mark, so none is written.
pub fn encode_string(text: &str) -> Result<Vec<u8>, FormatError> {
    let mut out = Vec::with_capacity(4 + text.len());
    put_string(&mut out, text)?;
    Ok(out)
}

/// Cursor over an input buffer. Every read is bounds-checked against the
/// remaining input before any allocation happens.
#[derive(Debug)]
pub struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    pub fn new(buf: &'a [u8]) -> Self {
        Self { buf, pos: 0 }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    pub fn take(&mut self, len: usize) -> Result<&'a [u8], FormatError> {
        if len > self.remaining() {
            return Err(FormatError::Truncated {
                needed: self.pos as u64 + len as u64,
                available: self.buf.len() as u64,
            });
        }
        let slice = &self.buf[self.pos..self.pos + len];
        self.pos += len;
        Ok(slice)
    }

    pub fn array<const N: usize>(&mut self) -> Result<[u8; N], FormatError> {
        let mut out = [0u8; N];
        out.copy_from_slice(self.take(N)?);
        Ok(out)
    }

    pub fn u32(&mut self) -> Result<u32, FormatError> {
        self.array().map(decode_u32)
    }

    /// Reads a length-prefixed UTF-8 string of at most `max_len` bytes.
    pub fn string(&mut self, max_len: usize) -> Result<String, FormatError> {
        let len = self.u32()? as usize;
        if len > max_len {
            return Err(FormatError::OversizeString(len));
        }
        let bytes = self.take(len)?;
        std::str::from_utf8(bytes)
            .map(str::to_owned)
            .map_err(|_| FormatError::InvalidUtf8Name)
    }

    pub fn finish(self) -> Result<(), FormatError> {
        if self.remaining() != 0 {
            return Err(FormatError::LengthMismatch {
                field: "trailing bytes",
                expected: self.pos as u64,
                actual: self.buf.len() as u64,
            });
        }
        Ok(())
    }
}
