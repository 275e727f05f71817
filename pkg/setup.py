"""Setup configuration for hermitia."""

from setuptools import setup, find_packages

setup(
    name="hermitia",
    version="0.1.0",
    description="Mechanical verification of the classification of universal binary Hermitian forms",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    package_data={"hermitia.core": ["data/*.yaml"]},
    python_requires=">=3.10",
    install_requires=[
        "python-dotenv>=1.0.0",
        "pydantic>=2.5.0",
        "pydantic-settings>=2.1.0",
        "numpy>=1.26.0,<2.0.0",
        "sympy>=1.12",
        "networkx>=3.2.0",
        "typer[all]>=0.9.0",
        "rich>=13.7.0",
        "pyyaml>=6.0.1",
    ],
    entry_points={
        "console_scripts": [
            "hermitia=hermitia.cli.main:app",
        ],
    },
)
