"""
graphtopy CLI package.

Entry point: graphtopy.cli.__main__:main
"""
