"""Web service wrapping the core package."""
