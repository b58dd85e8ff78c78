//! Stub; replaced by the real CLI later in the build.
pub fn run() -> i32 {
    0
}
