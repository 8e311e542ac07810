//! idforge — synthetic ID-card image generation and PAD evaluation.
//!
//! The crate is organised around the stages of a document-fraud research
//! pipeline:
//!
//! 1. [`imaging`] – raster types plus the geometric and morphological
//!    primitives everything else builds on (HSV conversion, projective
//!    warping, binary-mask morphology, inscribed rectangles, PNG I/O).
//! 2. [`texture`] – the QR-tagged colour palette, device-noise texture
//!    isolation from palette captures, the `.texr` residual format, and
//!    texture transfer onto bona fide images to synthesise print/screen
//!    attack species.
//! 3. [`template`] – template-based card rendering with random identities,
//!    HSV jitter and random projective warps, and composite splicing.
//! 4. [`fid`] – Fréchet distance between Gaussian fits of two feature sets,
//!    including the symmetric-PSD matrix square root.
//! 5. [`pad`] – ISO/IEC 30107-3 metrics from detector score files: APCER
//!    per species, BPCER, DET curves, EER and BPCER_AP.
//! 6. [`dataset`] – manifest-driven dataset bookkeeping: validation,
//!    stratified splits and training-mix assembly.
//!
//! All randomised operations are deterministic functions of their inputs and
//! an explicit `u64` seed; batch runners derive per-item seeds as
//! `base_seed + item_index` so results are independent of scheduling.

pub mod dataset;
pub mod fid;
pub mod imaging;
pub mod pad;
pub mod template;
pub mod texture;
