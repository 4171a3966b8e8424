from setuptools import find_packages, setup

setup(
    name="conjlogic",
    version="0.1.0",
    description="Three-valued logic of predictions on conjugate degrees of freedom",
    packages=find_packages(exclude=["tests"]),
    package_data={"conjlogic": ["config.yaml"]},
    python_requires=">=3.10",
    install_requires=[
        "numpy>=2.2",
        "pandas>=2.3",
        "PyYAML>=6.0",
    ],
    extras_require={"test": ["pytest>=8.4"]},
    entry_points={"console_scripts": ["conjlogic=conjlogic.cli:main"]},
)
