#  This file is managed by 'repo_helper'. Don't edit it directly.

__all__ = ["extras_require"]

extras_require = {
		"testing": ["coincidence>=0.2.0", "pytest>=6.2.0"],
		"all": ["coincidence>=0.2.0", "pytest>=6.2.0"]
		}
