"""nhsf: exact structure-function spaces for nonholonomic flag manifolds."""

ENGINE_VERSION = "1.0.0"
