//! Saving and loading structures, and SVG output for laser cutting.

mod document;
mod svg;

pub use document::{
    first_overlap, from_text, load, load_unchecked, parse_unchecked, save, to_text, validate,
    LoadError, FORMAT_NAME, FORMAT_VERSION,
};
pub use svg::{to_svg, SvgOptions, SvgPlan};
