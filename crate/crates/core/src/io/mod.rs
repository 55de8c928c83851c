//! Element documents, points, SVG rendering and closure certificates.

pub mod certificate;
pub mod svg;
pub mod text;

pub use certificate::ClosureCertificate;
pub use svg::render_svg;
pub use text::{format_point, parse_element, parse_point, serialize_element};
