from re import search
from setuptools import setup, find_packages

with open("src/temporal_homogenization/version.py") as version_file:
    version = search('version = "(.*)"', version_file.read()).group(1)

with open("README.md") as readme_file:
    readme = readme_file.read()

setup(
    name="temporal-homogenization",
    version=version,
    description="Effective dynamics of linear ODEs with fast periodic perturbations",
    long_description=readme,
    long_description_content_type="text/markdown",
    keywords="homogenization parametric-resonance floquet ode",
    author="Temporal Homogenization Developers",
    license="MIT",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    install_requires=["numpy>=1.20,<2", "scipy>=1.7,<2"],
    python_requires=">=3.8,<4",
    packages=find_packages("src"),
    package_dir={"": "src"},
    # PEP-561: https://www.python.org/dev/peps/pep-0561/
    package_data={"temporal_homogenization": ["py.typed"]},
    include_package_data=True,
    entry_points={
        "console_scripts": [
            "temporal-homogenization = temporal_homogenization.cli.main:main"
        ]
    },
    zip_safe=False,
)
